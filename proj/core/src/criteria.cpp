#include "ternrec/criteria.hpp"

namespace ternrec {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Sun: return "sun";
    case Method::U: return "u";
    case Method::CapU: return "capu";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "sun") return Method::Sun;
  if (name == "u") return Method::U;
  if (name == "capu" || name == "capU") return Method::CapU;
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "'");
}

BigInt sun_excluded_divisor(const Cubic& f) {
  const BigInt a1 = f.a1(), a2 = f.a2();
  return 6 * to_big(f.disc()) * (a1 * a1 - 3 * a2);
}

BigInt capu_excluded_divisor(const Cubic& f) { return sun_excluded_divisor(f); }

BigInt u_excluded_divisor(const Cubic& f) {
  const BigInt a2 = f.a2(), a3 = f.a3();
  const BigInt d = to_big(f.d());
  const BigInt a2_cubed = a2 * a2 * a2;
  const BigInt first = 20 * a2_cubed * a3 + 27 * a2_cubed + 9 * a2 * d;
  const BigInt second = 31 * a2 * a2 + d;
  return 6 * to_big(f.disc()) * a2 * a3 * (first * first - d * second * second);
}

namespace {

SequenceKind sequence_for(Method m) {
  switch (m) {
    case Method::Sun: return SequenceKind::SunS;
    case Method::U: return SequenceKind::SmallU;
    case Method::CapU: return SequenceKind::CapU;
  }
  return SequenceKind::SunS;
}

}  // namespace

Criterion::Criterion(Method method, const Cubic& f)
    : method_(method), cubic_(f), sequence_{}, excluded_{} {
  if (!f.irreducible()) throw PreconditionViolation(f.str() + " is reducible over Q");
  if (method == Method::U && !f.depressed()) {
    throw PreconditionViolation("the u-criterion needs a depressed cubic (a1 = 0)");
  }
  sequence_ = spec_from(sequence_for(method), f);
  switch (method) {
    case Method::Sun: excluded_ = sun_excluded_divisor(f); break;
    case Method::U: excluded_ = u_excluded_divisor(f); break;
    case Method::CapU: excluded_ = capu_excluded_divisor(f); break;
  }
  if (excluded_ == 0) {
    throw CriterionInapplicable(std::string(to_string(method)) +
                                "-criterion excluded expression vanishes for " + f.str());
  }
}

Admissibility Criterion::admissibility(u64 p) const { return {admissible(p), excluded_}; }

Classification Criterion::classify(u64 p) const {
  if (!admissible(p)) {
    throw PreconditionViolation("p = " + std::to_string(p) + " is excluded by the " +
                                std::string(to_string(method_)) + "-criterion");
  }
  const Cubic& f = cubic_;
  const u64 a1 = reduce(f.a1(), p), a2 = reduce(f.a2(), p);
  const u64 disc = reduce(f.disc(), p);

  u64 value = 0, three = 0, zero = 0;
  switch (method_) {
    case Method::Sun:
      value = term_mod(sequence_, p + 1, p);
      three = sub_mod(mul_mod(a1, a1, p), mul_mod(2, a2, p), p);
      zero = a2;
      break;
    case Method::U: {
      const u64 u = term_mod(sequence_, p - 1, p);
      value = mul_mod(disc, mul_mod(u, u, p), p);
      three = 0;
      zero = pow_mod(a2, 4, p);
      break;
    }
    case Method::CapU: {
      const u64 u = term_mod(sequence_, p - 1, p);
      value = mul_mod(disc, mul_mod(u, u, p), p);
      const u64 k = sub_mod(mul_mod(a1, a1, p), mul_mod(3 % p, a2, p), p);
      three = 0;
      zero = mul_mod(k, k, p);
      break;
    }
  }
  if (value == three) return {RootClass::Three, method_};
  if (value == zero) return {RootClass::Zero, method_};
  return {RootClass::One, method_};
}

bool sun_admissible(const Cubic& f, u64 p) { return Criterion(Method::Sun, f).admissible(p); }
Classification sun_classify(const Cubic& f, u64 p) { return Criterion(Method::Sun, f).classify(p); }

bool u_admissible(const Cubic& f, u64 p) { return Criterion(Method::U, f).admissible(p); }
Classification u_classify(const Cubic& f, u64 p) { return Criterion(Method::U, f).classify(p); }

bool capu_admissible(const Cubic& f, u64 p) { return Criterion(Method::CapU, f).admissible(p); }
Classification capu_classify(const Cubic& f, u64 p) {
  return Criterion(Method::CapU, f).classify(p);
}

}  // namespace ternrec
