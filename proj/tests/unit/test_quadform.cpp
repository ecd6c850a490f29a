#include <doctest.h>

#include "oracles.hpp"
#include "ternrec/quadform.hpp"

using namespace ternrec;

namespace {

// Any (X, Y) with X, Y >= 0 and m p = X^2 + n Y^2, by direct scan.
bool representable(u64 n, unsigned m, u64 p) {
  const u64 target = m * p;
  for (u64 y = 0; n * y * y <= target; ++y)
    if (is_square(target - n * y * y)) return true;
  return false;
}

}  // namespace

TEST_CASE("represent") {
  CHECK(represent(23, 59) == Representation{6, 1});
  CHECK(represent(11, 47) == Representation{6, 1});
  CHECK_FALSE(represent(23, 13).has_value());
  CHECK(represent(31, 47) == Representation{4, 1});
  CHECK(represent(1, 13) == Representation{3, 2});
  CHECK(represent(1, 2) == Representation{1, 1});
  CHECK(represent(23, 23) == Representation{0, 1});
  CHECK_FALSE(represent(23, 2).has_value());
  CHECK_THROWS_AS(represent(0, 5), std::invalid_argument);

  const u64 p = (u64{1} << 61) - 1;
  const auto big = represent(3, p);  // p = 1 mod 3
  REQUIRE(big.has_value());
  CHECK(BigInt(big->x) * big->x + 3 * BigInt(big->y) * big->y == p);
}

TEST_CASE("represent4") {
  CHECK(represent4(23, 59) == Representation{12, 2});
  CHECK(represent4(83, 23) == Representation{3, 1});
  CHECK_FALSE(represent4(83, 5).has_value());
}

TEST_CASE("represent agrees with scanning") {
  const u64 ns[] = {1, 2, 3, 7, 11, 23, 31, 59, 83, 211, 907};
  for (u64 p : oracle::primes_below(10000)) {
    for (u64 n : ns) {
      const auto r = represent(n, p);
      CHECK(r.has_value() == representable(n, 1, p));
      if (r) CHECK(r->x * r->x + n * r->y * r->y == p);
      const auto r4 = represent4(n, p);
      CHECK(r4.has_value() == representable(n, 4, p));
      if (r4) CHECK(r4->x * r4->x + n * r4->y * r4->y == 4 * p);
    }
  }
}

TEST_CASE("represent_enum") {
  CHECK(represent_enum({23, 1, Constraint::XNonzero}, 23) == Representation{0, 1});
  CHECK_FALSE(satisfies(Representation{0, 1}, Constraint::XNonzero));
  CHECK(represent_enum({23, 4, Constraint::ParityEvenSum}, 59) == Representation{12, 2});
  CHECK(represent_enum({31, 1, Constraint::None}, 47) == Representation{4, 1});
  CHECK_THROWS_AS(represent_enum({23, 4, Constraint::None}, 300'000'007), std::out_of_range);

  const u64 ns[] = {11, 23, 31, 59, 83};
  for (u64 p : oracle::primes_below(10000)) {
    for (u64 n : ns) {
      CHECK(represent_enum({n, 1, Constraint::None}, p) == represent(n, p));
      CHECK(represent_enum({n, 4, Constraint::None}, p).has_value() == represent4(n, p).has_value());
    }
  }
}

TEST_CASE("constraint preference") {
  // 4 * 83 = 332 = 0^2 + 83 * 2^2 only.
  const auto r = represent_enum({83, 4, Constraint::ParityEvenSum}, 83);
  REQUIRE(r.has_value());
  CHECK(satisfies(*r, Constraint::ParityEvenSum));

  // When a representation meeting the constraint exists, it is returned.
  for (u64 p : oracle::primes_below(5000)) {
    for (u64 n : {23ULL, 31ULL, 59ULL, 211ULL}) {
      const auto r4 = represent_enum({n, 4, Constraint::ParityEvenSum}, p);
      if (!r4) continue;
      bool exists = false;
      for (u64 y = 0; n * y * y <= 4 * p; ++y) {
        u64 x = 0;
        if (is_square(4 * p - n * y * y, &x) && (x + y) % 2 == 0) exists = true;
      }
      CHECK(satisfies(*r4, Constraint::ParityEvenSum) == exists);
    }
  }
}

TEST_CASE("satisfies and constraint names") {
  CHECK_FALSE(satisfies({0, 1}, Constraint::XNonzero));
  CHECK(satisfies({12, 2}, Constraint::ParityEvenSum));
  CHECK(satisfies({3, 1}, Constraint::ParityEvenSum));
  CHECK_FALSE(satisfies({3, 2}, Constraint::ParityEvenSum));
  CHECK(satisfies({0, 0}, Constraint::None));
  CHECK(parse_constraint("x_nonzero") == Constraint::XNonzero);
  CHECK(parse_constraint("parity_even_sum") == Constraint::ParityEvenSum);
  CHECK(to_string(Constraint::None) == "none");
  CHECK_THROWS_AS(parse_constraint("odd"), std::invalid_argument);
}
