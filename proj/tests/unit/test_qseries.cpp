#include <doctest.h>

#include "oracles.hpp"
#include "ternrec/qseries.hpp"

using namespace ternrec;

namespace {

constexpr u64 kBigMod = 2147483629;  // prime below 2^31

SeriesMod from(u64 m, std::vector<u64> c) { return SeriesMod(m, std::move(c)); }

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK(series_mul(from(101, {1, 1, 0}), from(101, {1, 1, 0})) == from(101, {1, 2, 1}));

  SeriesMod a(97, 20);
  for (std::size_t i = 0; i <= 20; ++i) a.set(i, static_cast<i64>(i * i) - 50);
  SeriesMod one(97, 20);
  one.set(0, 1);
  CHECK(series_mul(a, one) == a);
  CHECK(series_pow(a, 0) == one);
  CHECK(series_pow(a, 3) == series_mul(a, series_mul(a, a)));

  SeriesMod geo(1009, 50), one_minus_q(1009, 50);
  for (std::size_t i = 0; i <= 50; ++i) geo.set(i, 1);
  one_minus_q.set(0, 1);
  one_minus_q.set(1, -1);
  SeriesMod unit(1009, 50);
  unit.set(0, 1);
  CHECK(series_mul(one_minus_q, geo) == unit);

  CHECK_THROWS_AS(series_mul(SeriesMod(7, 3), SeriesMod(11, 3)), std::invalid_argument);
  CHECK_THROWS_AS(series_mul(SeriesMod(7, 3), SeriesMod(7, 4)), std::invalid_argument);
  CHECK_THROWS_AS(SeriesMod(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(SeriesMod(7, kSeriesLimitMax + 1), std::invalid_argument);
}

TEST_CASE("series_mul against schoolbook with a large modulus") {
  SeriesMod a(kBigMod, 300), b(kBigMod, 300);
  for (std::size_t i = 0; i <= 300; ++i) {
    a.set(i, static_cast<i64>(kBigMod - 1 - i * 7919));
    b.set(i, static_cast<i64>(kBigMod - 2 - i * 104729));
  }
  const SeriesMod c = series_mul(a, b);
  for (std::size_t n = 0; n <= 300; ++n) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += BigInt(a[i]) * b[n - i];
    CHECK(c[n] == static_cast<u64>(s % kBigMod));
  }
}

TEST_CASE("delta") {
  const SeriesMod d = delta_mod(100, kBigMod);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == kBigMod - 24);
  CHECK(delta_mod(100, 23)[23] == 1);

  const auto tau = oracle::tau_exact(100);
  for (std::size_t n = 1; n <= 100; ++n) {
    BigInt r = tau[n] % kBigMod;
    if (r < 0) r += kBigMod;
    CHECK(d[n] == static_cast<u64>(r));
  }
  CHECK(tau[2] == -24);
  CHECK(tau[3] == 252);
}

TEST_CASE("delta at other moduli matches reduction of exact tau") {
  const auto tau = oracle::tau_exact(300);
  for (u64 m : {2ULL, 23ULL, 691ULL, 65536ULL}) {
    const SeriesMod dm = delta_mod(300, m);
    for (std::size_t n = 1; n <= 300; ++n) {
      BigInt r = tau[n] % m;
      if (r < 0) r += m;
      CHECK(dm[n] == static_cast<u64>(r));
    }
  }
}

TEST_CASE("delta congruences") {
  // tau(n) == sigma_11(n) (mod 691)
  const SeriesMod d = delta_mod(500, 691);
  for (u64 n = 1; n <= 500; ++n) {
    u64 sigma = 0;
    for (u64 k = 1; k <= n; ++k)
      if (n % k == 0) sigma = (sigma + pow_mod(k, 11, 691)) % 691;
    CHECK(d[n] == sigma);
  }
}

TEST_CASE("tau16") {
  const SeriesMod t = tau16_mod(200, kBigMod);
  CHECK(t[1] == 1);
  CHECK(t[2] == 216);
  CHECK(tau16_mod(100, 31)[47] == 2);

  // Delta * E4 built from exact tau and sigma_3.
  const auto tau = oracle::tau_exact(200);
  for (std::size_t n = 1; n <= 200; ++n) {
    BigInt s = tau[n];
    for (std::size_t k = 1; k < n; ++k) {
      BigInt sigma3 = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) sigma3 += BigInt(d) * d * d;
      s += 240 * sigma3 * tau[n - k];
    }
    s %= kBigMod;
    if (s < 0) s += kBigMod;
    CHECK(t[n] == static_cast<u64>(s));
  }
}

TEST_CASE("r12") {
  const SeriesMod r = r12_mod(40, kBigMod);
  CHECK(r[0] == 1);
  CHECK(r[1] == 24);
  CHECK(r[2] == 264);
  for (u64 n = 0; n <= 20; ++n) CHECK(BigInt(r[n]) == oracle::r12_enumerate(n));
}

TEST_CASE("series kinds") {
  CHECK(parse_series_kind("delta") == SeriesKind::Delta);
  CHECK(parse_series_kind("tau16") == SeriesKind::Tau16);
  CHECK(parse_series_kind("r12") == SeriesKind::R12);
  CHECK_THROWS_AS(parse_series_kind("eta"), std::invalid_argument);
  CHECK(make_series(SeriesKind::R12, 10, 11) == r12_mod(10, 11));
  CHECK(to_string(SeriesKind::Tau16) == "tau16");
}
