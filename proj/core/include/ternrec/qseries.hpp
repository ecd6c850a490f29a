#pragma once

// Truncated q-expansions with coefficients reduced modulo a small modulus.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ternrec/modarith.hpp"

namespace ternrec {

inline constexpr std::size_t kSeriesLimitMax = 100'000;
inline constexpr u64 kSeriesModulusMax = u64{1} << 31;
inline constexpr std::size_t kDefaultSeriesLimit = 10'000;

/// Coefficients 0..limit of a power series, each reduced mod `modulus`.
class SeriesMod {
 public:
  SeriesMod(u64 modulus, std::size_t limit);
  SeriesMod(u64 modulus, std::vector<u64> coeffs);

  u64 modulus() const { return modulus_; }
  std::size_t limit() const { return coeffs_.size() - 1; }

  u64 operator[](std::size_t n) const { return coeffs_[n]; }
  u64 at(std::size_t n) const { return coeffs_.at(n); }
  void set(std::size_t n, i64 value) { coeffs_.at(n) = reduce(value, modulus_); }

  std::span<const u64> coeffs() const { return coeffs_; }

  friend bool operator==(const SeriesMod&, const SeriesMod&) = default;

 private:
  u64 modulus_;
  std::vector<u64> coeffs_;
};

/// Truncated Cauchy product. Throws std::invalid_argument on a modulus or
/// limit mismatch.
SeriesMod series_mul(const SeriesMod& a, const SeriesMod& b);
SeriesMod series_pow(const SeriesMod& a, u64 e);

/// tau(n) mod m: Delta = q * (prod (1 - q^k)^3)^8.
SeriesMod delta_mod(std::size_t limit, u64 m);
/// tau_16(n) mod m: coefficients of Delta * E4.
SeriesMod tau16_mod(std::size_t limit, u64 m);
/// r_12(n) mod m: coefficients of theta^12.
SeriesMod r12_mod(std::size_t limit, u64 m);

enum class SeriesKind { Delta, Tau16, R12 };

std::string_view to_string(SeriesKind k);
SeriesKind parse_series_kind(std::string_view name);
SeriesMod make_series(SeriesKind kind, std::size_t limit, u64 m);

}  // namespace ternrec
