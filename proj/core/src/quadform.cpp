#include "ternrec/quadform.hpp"

#include <stdexcept>
#include <string>

namespace ternrec {

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::None: return "none";
    case Constraint::XNonzero: return "x_nonzero";
    case Constraint::ParityEvenSum: return "parity_even_sum";
  }
  return "?";
}

Constraint parse_constraint(std::string_view name) {
  if (name == "none" || name.empty()) return Constraint::None;
  if (name == "x_nonzero") return Constraint::XNonzero;
  if (name == "parity_even_sum") return Constraint::ParityEvenSum;
  throw std::invalid_argument("unknown constraint '" + std::string(name) + "'");
}

bool satisfies(const Representation& rep, Constraint c) {
  switch (c) {
    case Constraint::None: return true;
    case Constraint::XNonzero: return rep.x != 0;
    case Constraint::ParityEvenSum: return (rep.x + rep.y) % 2 == 0;
  }
  return false;
}

namespace {

// Y ascending; the first hit with `want` satisfied wins, else the first hit.
std::optional<Representation> scan(u64 n, u64 target, Constraint want) {
  std::optional<Representation> first;
  for (u64 y = 0; n * y * y <= target; ++y) {
    u64 x;
    if (!is_square(target - n * y * y, &x)) continue;
    const Representation rep{x, y};
    if (satisfies(rep, want)) return rep;
    if (!first) first = rep;
  }
  return first;
}

}  // namespace

std::optional<Representation> represent(u64 n, u64 p) {
  if (n == 0) throw std::invalid_argument("form X^2 + nY^2 needs n >= 1");
  if (p == 2 || n % p == 0) return scan(n, p, Constraint::None);
  if (n > p) return is_square(p) ? std::optional<Representation>({isqrt(p), 0}) : std::nullopt;

  const auto root = sqrt_mod(p - n % p, p);
  if (!root) return std::nullopt;

  u64 a = p;
  u64 b = *root;  // sqrt_mod gives the root <= p/2
  const u64 limit = isqrt(p);
  while (b > limit) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  const u64 rest = p - b * b;
  if (rest % n != 0) return std::nullopt;
  u64 y;
  if (!is_square(rest / n, &y)) return std::nullopt;
  Representation rep{b, y};
  if (n == 1 && rep.x < rep.y) std::swap(rep.x, rep.y);
  return rep;
}

std::optional<Representation> represent4(u64 n, u64 p) {
  if (n == 0) throw std::invalid_argument("form X^2 + nY^2 needs n >= 1");
  return scan(n, 4 * p, Constraint::ParityEvenSum);
}

std::optional<Representation> find_representation(const FormSpec& spec, u64 p) {
  if (spec.m == 1) return represent(spec.n, p);
  if (spec.m == 4) return represent4(spec.n, p);
  throw std::invalid_argument("form multiplier m must be 1 or 4");
}

std::optional<Representation> represent_enum(const FormSpec& spec, u64 p) {
  if (spec.m != 1 && spec.m != 4) throw std::invalid_argument("form multiplier m must be 1 or 4");
  if (p > kEnumCeiling / spec.m) throw std::out_of_range("represent_enum needs m p <= 10^9");
  return scan(spec.n, spec.m * p, spec.constraint);
}

}  // namespace ternrec
