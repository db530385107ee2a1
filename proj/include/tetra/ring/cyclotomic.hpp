/**
 * @file cyclotomic.hpp
 * @brief Cyclotomic polynomials in v and fast divisibility tests.
 *
 * Every denominator met in the q-oscillator computations is a product of
 * factors 1 - q^k, 1 + q^k, [m] and q - 1, i.e. of cyclotomic polynomials in v.
 * Denominators are therefore kept factored over the Phi_d, and cancellation
 * against a numerator only needs a divisibility test per factor. The test
 * evaluates the numerator at a primitive d-th root of unity modulo a prime
 * p = 1 (mod 4d); a nonzero residue proves non-divisibility, a zero residue is
 * confirmed by exact division.
 */
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tetra/ring/laurent_poly.hpp"

namespace tetra::cyclo {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Element of exact multiplicative order `order` modulo prime p (order | p - 1).
inline std::uint64_t root_of_order(std::uint64_t order, std::uint64_t p) {
  auto fac = prime_factors(order);
  for (std::uint64_t g = 2;; ++g) {
    std::uint64_t w = powmod(g, (p - 1) / order, p);
    bool ok = w != 0;
    for (auto r : fac)
      if (powmod(w, order / r, p) == 1) ok = false;
    if (ok && (order != 1 || w == 1)) return w;
  }
}

}  // namespace detail

struct ModularProbe {
  std::uint64_t prime = 0;
  std::uint64_t omega = 0;  ///< primitive d-th root of unity mod prime
  std::uint64_t imod = 0;   ///< a square root of -1 mod prime
};

inline int totient(int d) {
  int r = d;
  int n = d;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

class Table {
 public:
  static Table& instance() {
    static Table t;
    return t;
  }

  /// Phi_d(v), d >= 1.
  const LaurentPoly& poly(int d) {
    std::lock_guard lock(mu_);
    return poly_locked(d);
  }

  const ModularProbe& probe(int d) {
    std::lock_guard lock(mu_);
    auto it = probes_.find(d);
    if (it != probes_.end()) return it->second;
    const std::uint64_t step = 4ULL * static_cast<std::uint64_t>(d);
    std::uint64_t p = ((1ULL << 61U) / step) * step + 1;
    while (!detail::is_prime(p)) p += step;
    ModularProbe mp{p, detail::root_of_order(static_cast<std::uint64_t>(d), p), detail::root_of_order(4, p)};
    return probes_.emplace(d, mp).first->second;
  }

 private:
  const LaurentPoly& poly_locked(int d) {
    auto it = polys_.find(d);
    if (it != polys_.end()) return it->second;
    // v^d - 1 divided by Phi_e for proper divisors e of d
    LaurentPoly p = LaurentPoly::v_pow(d) - LaurentPoly(1);
    for (int e = 1; e < d; ++e) {
      if (d % e) continue;
      p = *LaurentPoly::exact_div(p, poly_locked(e));
    }
    return polys_.emplace(d, std::move(p)).first->second;
  }

  std::mutex mu_;
  std::map<int, LaurentPoly> polys_;
  std::map<int, ModularProbe> probes_;
};

inline const LaurentPoly& phi(int d) { return Table::instance().poly(d); }

/// Returns num / Phi_d if Phi_d divides num.
inline std::optional<LaurentPoly> divide_out(const LaurentPoly& num, int d) {
  if (num.is_zero()) return LaurentPoly();
  const LaurentPoly& f = phi(d);
  if (num.span() < f.span()) return std::nullopt;
  const ModularProbe& mp = Table::instance().probe(d);
  auto r = num.eval_mod(mp.prime, mp.omega, mp.imod);
  if (r && *r != 0) return std::nullopt;
  return LaurentPoly::exact_div(num, f);
}

/// Factored cyclotomic part: sorted pairs (d, exponent > 0).
using Factors = std::vector<std::pair<int, int>>;

/// Splits a polynomial with nonzero constant term into its cyclotomic factors
/// and a remaining cofactor (same leading coefficient as the input).
inline std::pair<Factors, LaurentPoly> factor(LaurentPoly p) {
  Factors out;
  const int deg = p.span();
  const int bound = 6 * deg + 6;
  for (int d = 1; d <= bound && p.span() > 0; ++d) {
    if (totient(d) > p.span()) continue;
    int e = 0;
    while (auto qt = divide_out(p, d)) {
      p = std::move(*qt);
      ++e;
      if (p.span() < totient(d)) break;
    }
    if (e) out.emplace_back(d, e);
  }
  return {std::move(out), std::move(p)};
}

inline LaurentPoly expand(const Factors& f) {
  LaurentPoly r(1);
  for (auto [d, e] : f) r *= phi(d).pow(static_cast<unsigned>(e));
  return r;
}

}  // namespace tetra::cyclo
