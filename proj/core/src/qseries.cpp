#include "ternrec/qseries.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ternrec {

namespace {

void check_params(std::size_t limit, u64 m) {
  if (m < 2 || m >= kSeriesModulusMax) throw std::invalid_argument("series modulus must be in [2, 2^31)");
  if (limit > kSeriesLimitMax) throw std::invalid_argument("series limit must be <= 100000");
}

}  // namespace

SeriesMod::SeriesMod(u64 modulus, std::size_t limit) : modulus_(modulus), coeffs_(limit + 1, 0) {
  check_params(limit, modulus);
}

SeriesMod::SeriesMod(u64 modulus, std::vector<u64> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  check_params(limit(), modulus);
  for (u64& c : coeffs_) c %= modulus_;
}

SeriesMod series_mul(const SeriesMod& a, const SeriesMod& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("series modulus mismatch");
  if (a.limit() != b.limit()) throw std::invalid_argument("series limit mismatch");
  const u64 m = a.modulus();
  const std::size_t n = a.limit();

  // Accumulate unreduced; flush before the 64-bit accumulator could wrap.
  const u64 max_product = (m - 1) * (m - 1);
  const u64 batch = max_product == 0 ? std::numeric_limits<u64>::max()
                                     : (std::numeric_limits<u64>::max() - m) / max_product;
  std::vector<u64> acc(n + 1, 0);
  u64 pending = 0;
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i <= n; ++i) {
    const u64 ai = a[i];
    if (ai == 0) continue;
    if (++pending > batch) {
      for (u64& c : acc) c %= m;
      pending = 1;
    }
    u64* out = acc.data() + i;
    for (std::size_t j = 0; j + i <= n; ++j) out[j] += ai * bc[j];
  }
  for (u64& c : acc) c %= m;
  return SeriesMod(m, std::move(acc));
}

SeriesMod series_pow(const SeriesMod& a, u64 e) {
  SeriesMod result(a.modulus(), a.limit());
  result.set(0, 1);
  SeriesMod base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = series_mul(result, base);
    if (e > 1) base = series_mul(base, base);
  }
  return result;
}

SeriesMod delta_mod(std::size_t limit, u64 m) {
  check_params(limit, m);
  SeriesMod out(m, limit);
  if (limit == 0) return out;

  // Jacobi: prod (1 - q^k)^3 = sum_j (-1)^j (2j + 1) q^{j(j+1)/2}.
  SeriesMod cube(m, limit - 1);
  for (i64 j = 0;; ++j) {
    const std::size_t e = static_cast<std::size_t>(j * (j + 1) / 2);
    if (e > limit - 1) break;
    cube.set(e, (j % 2 == 0 ? 1 : -1) * (2 * j + 1));
  }
  SeriesMod eta24 = cube;
  for (int i = 0; i < 3; ++i) eta24 = series_mul(eta24, eta24);

  for (std::size_t n = 1; n <= limit; ++n) out.set(n, static_cast<i64>(eta24[n - 1]));
  return out;
}

SeriesMod tau16_mod(std::size_t limit, u64 m) {
  check_params(limit, m);
  // E4 = 1 + 240 sum sigma_3(k) q^k.
  std::vector<u64> sigma3(limit + 1, 0);
  for (std::size_t d = 1; d <= limit; ++d) {
    const u64 cube = pow_mod(d % m, 3, m);
    for (std::size_t k = d; k <= limit; k += d) sigma3[k] = add_mod(sigma3[k], cube, m);
  }
  SeriesMod e4(m, limit);
  e4.set(0, 1);
  const u64 scale = 240 % m;
  for (std::size_t k = 1; k <= limit; ++k) e4.set(k, static_cast<i64>(mul_mod(scale, sigma3[k], m)));
  return series_mul(delta_mod(limit, m), e4);
}

SeriesMod r12_mod(std::size_t limit, u64 m) {
  check_params(limit, m);
  SeriesMod theta(m, limit);
  theta.set(0, 1);
  for (std::size_t k = 1; k * k <= limit; ++k) theta.set(k * k, 2);
  return series_pow(theta, 12);
}

std::string_view to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Delta: return "delta";
    case SeriesKind::Tau16: return "tau16";
    case SeriesKind::R12: return "r12";
  }
  return "?";
}

SeriesKind parse_series_kind(std::string_view name) {
  if (name == "delta" || name == "tau") return SeriesKind::Delta;
  if (name == "tau16") return SeriesKind::Tau16;
  if (name == "r12") return SeriesKind::R12;
  throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

SeriesMod make_series(SeriesKind kind, std::size_t limit, u64 m) {
  switch (kind) {
    case SeriesKind::Delta: return delta_mod(limit, m);
    case SeriesKind::Tau16: return tau16_mod(limit, m);
    case SeriesKind::R12: return r12_mod(limit, m);
  }
  throw std::invalid_argument("unknown series kind");
}

}  // namespace ternrec
