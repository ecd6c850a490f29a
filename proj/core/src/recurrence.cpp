#include "ternrec/recurrence.hpp"

#include <stdexcept>

namespace ternrec {

namespace {

using Mat3 = std::array<std::array<u64, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b, u64 p) {
  Mat3 c{};
  if (p <= (u64{1} << 21)) {
    // Three products of 42-bit values fit a 64-bit accumulator.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]) % p;
    return c;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      u64 s = 0;
      for (int k = 0; k < 3; ++k) s = add_mod(s, mul_mod(a[i][k], b[k][j], p), p);
      c[i][j] = s;
    }
  return c;
}

// Row-vector convention: (t(k), t(k+1), t(k+2)) * M = (t(k+1), t(k+2), t(k+3)).
Mat3 step_matrix(const RecurrenceSpec& s, u64 p) {
  Mat3 m{};
  m[1][0] = 1 % p;
  m[2][1] = 1 % p;
  m[0][2] = neg_mod(reduce(s.coeffs[2], p), p);
  m[1][2] = neg_mod(reduce(s.coeffs[1], p), p);
  m[2][2] = neg_mod(reduce(s.coeffs[0], p), p);
  return m;
}

// Term one index before the stored origin.
i64 term_before_origin(const RecurrenceSpec& s) {
  const i64 c3 = s.coeffs[2];
  if (c3 != 1 && c3 != -1) {
    throw std::domain_error("backward step needs c3 = +-1 (" + s.label + ")");
  }
  const i64 rest = s.initial[2] + s.coeffs[0] * s.initial[1] + s.coeffs[1] * s.initial[0];
  return -rest * c3;
}

}  // namespace

SequenceKind parse_sequence_kind(std::string_view name) {
  if (name == "sun" || name == "sun_s") return SequenceKind::SunS;
  if (name == "u" || name == "small_u") return SequenceKind::SmallU;
  if (name == "capu" || name == "capU" || name == "cap_u") return SequenceKind::CapU;
  throw std::invalid_argument("unknown sequence kind '" + std::string(name) + "'");
}

RecurrenceSpec spec_from(SequenceKind kind, const Cubic& f) {
  RecurrenceSpec s;
  s.coeffs = {f.a1(), f.a2(), f.a3()};
  switch (kind) {
    case SequenceKind::SunS:
      s.initial = {3, -f.a1(), f.a1() * f.a1() - 2 * f.a2()};
      s.label = "s[" + f.str() + "]";
      break;
    case SequenceKind::SmallU:
      if (!f.depressed()) throw std::invalid_argument("u-sequence requires a1 = 0");
      s.initial = {0, -f.a2(), -f.a3()};
      s.label = "u[" + f.str() + "]";
      break;
    case SequenceKind::CapU:
      s.initial = {0, 1, -f.a1()};
      s.label = "U[" + f.str() + "]";
      break;
  }
  return s;
}

RecurrenceSpec named_spec(std::string_view name) {
  if (name == "tribonacci") return {{-1, -1, -1}, {1, 1, 2}, 1, "tribonacci"};
  if (name == "padovan") return {{0, -1, -1}, {0, 1, 1}, 0, "padovan"};
  if (name == "perrin") return {{0, -1, -1}, {3, 0, 2}, 0, "perrin"};
  if (name == "berstel") return {{-2, 4, -4}, {0, 0, 1}, 0, "berstel"};
  if (name == "cseq") return {{-1, 0, -1}, {0, 0, 1}, 0, "cseq"};
  if (name == "ex31") return {{0, -31, 62}, {0, 31, -62}, 0, "ex31"};
  throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

std::vector<std::string> named_spec_names() {
  return {"tribonacci", "padovan", "perrin", "berstel", "cseq", "ex31"};
}

u64 term_mod(const RecurrenceSpec& spec, u64 k, u64 p) {
  if (p < 2 || p >= kModulusCeiling) throw std::invalid_argument("modulus must be in [2, 2^62)");
  if (k < spec.origin) {
    // Only origin 1 is used; one backward step reaches index 0.
    return reduce(term_before_origin(spec), p);
  }
  u64 steps = k - spec.origin;
  if (steps < 3) return reduce(spec.initial[steps], p);

  Mat3 result{};
  for (int i = 0; i < 3; ++i) result[i][i] = 1 % p;
  Mat3 base = step_matrix(spec, p);
  for (; steps != 0; steps >>= 1) {
    if (steps & 1) result = mat_mul(result, base, p);
    if (steps > 1) base = mat_mul(base, base, p);
  }
  u64 out = 0;
  for (int i = 0; i < 3; ++i) {
    out = add_mod(out, mul_mod(reduce(spec.initial[i], p), result[i][0], p), p);
  }
  return out;
}

BigInt term_exact(const RecurrenceSpec& spec, unsigned k) {
  if (k > kExactTermLimit) throw std::out_of_range("term_exact is limited to k <= 64");
  if (k < spec.origin) return BigInt(term_before_origin(spec));
  std::array<BigInt, 3> w{BigInt(spec.initial[0]), BigInt(spec.initial[1]),
                          BigInt(spec.initial[2])};
  for (unsigned i = spec.origin; i < k; ++i) {
    BigInt next = -spec.coeffs[0] * w[2] - spec.coeffs[1] * w[1] - spec.coeffs[2] * w[0];
    w[0] = std::move(w[1]);
    w[1] = std::move(w[2]);
    w[2] = std::move(next);
  }
  return w[0];
}

}  // namespace ternrec
