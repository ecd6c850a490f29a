#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ternrec/bigint.hpp"
#include "ternrec/modarith.hpp"

using namespace ternrec;

TEST_CASE("mul_mod small and large moduli") {
  CHECK(mul_mod(3, 4, 5) == 2);
  CHECK(mul_mod(0, 12345, 99991) == 0);

  const u64 a = (u64{1} << 61) - 1;
  const u64 m = (u64{1} << 61) + 15;
  const BigInt expect = BigInt(a) * BigInt(a) % BigInt(m);
  CHECK(BigInt(mul_mod(a, a, m)) == expect);
  CHECK(mul_mod(a, a, m) == 256);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const u64 mod = (rng() % (kModulusCeiling - 2)) + 2;
    const u64 x = rng() % mod, y = rng() % mod;
    CHECK(BigInt(mul_mod(x, y, mod)) == BigInt(x) * BigInt(y) % BigInt(mod));
  }
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(17, 0, 101) == 1);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(5, 0, 1) == 0);

  std::mt19937_64 rng(11);
  const auto primes = oracle::primes_below(100000);
  for (int i = 0; i < 100; ++i) {
    const u64 p = primes[rng() % primes.size()];
    const u64 a = 1 + rng() % (p - 1);
    CHECK(pow_mod(a, p - 1, p) == 1);
  }
}

TEST_CASE("inv_mod") {
  CHECK(inv_mod(3, 7) == 5u);
  CHECK_FALSE(inv_mod(6, 9).has_value());
  const u64 p = (u64{1} << 61) - 1;
  const auto inv = inv_mod(123456789, p);
  REQUIRE(inv.has_value());
  CHECK(mul_mod(123456789, *inv, p) == 1);
}

TEST_CASE("kronecker") {
  CHECK(kronecker(-23, 59) == 1);
  CHECK(kronecker(-11, 47) == 1);
  CHECK(kronecker(6, 9) == 0);
  CHECK(kronecker(31, 31) == 0);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(kronecker(3, 8) == -1);  // (3/2) = -1
  CHECK(kronecker(5, -1) == 1);
  CHECK(kronecker(-5, -1) == -1);

  for (u64 p : oracle::primes_below(2000)) {
    if (p == 2) continue;
    for (i64 a = -40; a <= 40; ++a) {
      CHECK(kronecker(a, static_cast<i64>(p)) == oracle::euler(a, p));
    }
  }
}

TEST_CASE("kronecker is multiplicative in the top argument") {
  for (i64 a = -30; a <= 30; ++a) {
    for (i64 m = 1; m < 60; ++m) {
      for (i64 n = 1; n < 60; n += 7) {
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
      }
    }
  }
}

TEST_CASE("sqrt_mod") {
  CHECK(sqrt_mod(0, 59) == 0u);
  const auto r = sqrt_mod(reduce(i64{-23}, 59), 59);
  REQUIRE(r.has_value());
  CHECK(mul_mod(*r, *r, 59) == reduce(i64{-23}, 59));
  CHECK(*r <= 59 - *r);

  std::mt19937_64 rng(3);
  const auto primes = oracle::primes_below(200000);
  int nonresidues = 0;
  for (int i = 0; i < 400; ++i) {
    const u64 p = primes[1 + rng() % (primes.size() - 1)];
    const u64 a = 1 + rng() % (p - 1);
    const auto s = sqrt_mod(a, p);
    if (oracle::euler(static_cast<i64>(a), p) == 1) {
      REQUIRE(s.has_value());
      CHECK(mul_mod(*s, *s, p) == a);
    } else {
      CHECK_FALSE(s.has_value());
      ++nonresidues;
    }
  }
  CHECK(nonresidues >= 100);

  // p = 1 mod 8 exercises the full Tonelli-Shanks loop.
  const u64 p = 998244353;  // 119 * 2^23 + 1
  for (u64 a = 1; a < 2000; ++a) {
    const auto s = sqrt_mod(a, p);
    if (s) CHECK(mul_mod(*s, *s, p) == a);
  }
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(907));
  CHECK(is_prime((u64{1} << 61) - 1));
  CHECK_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
  CHECK(is_prime(18446744073709551557ULL));       // largest 64-bit prime

  const u64 limit = 1'000'000;
  const auto flags = oracle::sieve(limit);
  u64 disagreements = 0;
  for (u64 n = 0; n < limit; ++n) disagreements += flags[n] != is_prime(n);
  CHECK(disagreements == 0);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(~u64{0}) == 4294967295ULL);
  u64 r = 0;
  CHECK(is_square(1u << 30, &r));
  CHECK(r == (1u << 15));
  CHECK_FALSE(is_square(99));
}

TEST_CASE("primes_in") {
  CHECK(primes_in(0, 10).primes == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_in(10, 10).primes.empty());
  CHECK(primes_in(0, 1'000'000).primes.size() == oracle::primes_below(1'000'000).size());
  CHECK(primes_in(0, 1'000'000).primes.size() == 78498);

  const auto window = primes_in(1'000'000, 1'000'100);
  std::vector<u64> expect;
  for (u64 n = 1'000'000; n < 1'000'100; ++n)
    if (is_prime(n)) expect.push_back(n);
  CHECK(window.primes == expect);

  // Segment boundaries.
  const u64 seg = u64{1} << 18;
  const auto across = primes_in(seg - 1000, 3 * seg + 1000);
  const auto flags = oracle::sieve(3 * seg + 1000);
  std::vector<u64> expect2;
  for (u64 n = seg - 1000; n < 3 * seg + 1000; ++n)
    if (flags[n]) expect2.push_back(n);
  CHECK(across.primes == expect2);
}

TEST_CASE("Residue") {
  const Residue a(-3, 7), b(5, 7);
  CHECK(a.value() == 4);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 6);
  CHECK((a * b).value() == 6);
  CHECK((-a).value() == 3);
  CHECK(a.pow(6) == 1);
  CHECK(a == Residue(11, 7));
}
