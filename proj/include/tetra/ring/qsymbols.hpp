/**
 * @file qsymbols.hpp
 * @brief q-numbers, q-factorials, both q-binomials and q-Pochhammer symbols.
 *
 * Bases are given as v-exponents: base_v = 2 means q, 1 means q^{1/2}, 4 means q^2.
 * Everything is computed as a finite product or sum of Laurent polynomials.
 */
#pragma once

#include <stdexcept>

#include "tetra/ring/series.hpp"

namespace tetra {

/// [m]_p with p = v^base_v; negative m gives -[-m].
inline LaurentPoly qnum_poly(int m, int base_v = 2) {
  if (m < 0) return -qnum_poly(-m, base_v);
  LaurentPoly r;
  for (int k = 0; k < m; ++k) r += LaurentPoly::v_pow(base_v * (m - 1 - 2 * k));
  return r;
}
inline Scalar qnum(int m, int base_v = 2) { return qnum_poly(m, base_v); }

inline LaurentPoly qfact_poly(int m, int base_v = 2) {
  if (m < 0) throw std::invalid_argument("q-factorial of a negative integer");
  LaurentPoly r(1);
  for (int k = 2; k <= m; ++k) r *= qnum_poly(k, base_v);
  return r;
}
inline Scalar qfact(int m, int base_v = 2) { return qfact_poly(m, base_v); }

/// (v^a; v^b)_m = prod_{k=1}^m (1 - v^{a + b(k-1)}).
inline LaurentPoly poch_poly(int a, int b, int m) {
  if (m < 0) throw std::invalid_argument("q-Pochhammer symbol with negative length");
  LaurentPoly r(1);
  for (int k = 0; k < m; ++k) r *= LaurentPoly(1) - LaurentPoly::v_pow(a + b * k);
  return r;
}

/// (z; p)_m for general Scalar z and base p.
inline Scalar poch(const Scalar& z, const Scalar& base, int m) {
  if (m < 0) throw std::invalid_argument("q-Pochhammer symbol with negative length");
  Scalar r(1);
  Scalar zp = z;
  for (int k = 0; k < m; ++k) {
    r *= Scalar(1) - zp;
    zp *= base;
  }
  return r;
}

/// (p; p)_hi / (p; p)_lo = prod_{k=lo+1}^{hi} (1 - p^k), p = v^base_v, hi >= lo >= 0.
inline LaurentPoly poch_ratio_poly(int hi, int lo, int base_v = 2) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("invalid q-Pochhammer ratio");
  LaurentPoly r(1);
  for (int k = lo + 1; k <= hi; ++k) r *= LaurentPoly(1) - LaurentPoly::v_pow(base_v * k);
  return r;
}

/// Gaussian binomial (p)_m / ((p)_k (p)_{m-k}), p = v^base_v; zero unless 0 <= k <= m.
inline LaurentPoly qbinom_poly(int m, int k, int base_v = 2) {
  if (k < 0 || m < 0 || k > m) return {};
  // row-by-row Pascal recurrence: C(r, j) = C(r-1, j-1) + p^j C(r-1, j)
  std::vector<LaurentPoly> row(static_cast<std::size_t>(k + 1));
  row[0] = LaurentPoly(1);
  for (int r = 1; r <= m; ++r) {
    for (int j = std::min(r, k); j >= 1; --j) {
      auto uj = static_cast<std::size_t>(j);
      row[uj] = row[uj - 1] + row[uj].shifted(base_v * j);
    }
  }
  return row[static_cast<std::size_t>(k)];
}
inline Scalar qbinom(int m, int k, int base_v = 2) { return qbinom_poly(m, k, base_v); }

/// Symmetric binomial [m]! / ([k]! [m-k]!); zero unless 0 <= k <= m.
inline LaurentPoly qbinom_sym_poly(int m, int k, int base_v = 2) {
  if (k < 0 || m < 0 || k > m) return {};
  // [m choose k] = p^{-k(m-k)} * Gaussian binomial in p^2
  return qbinom_poly(m, k, 2 * base_v).shifted(-base_v * k * (m - k));
}
inline Scalar qbinom_sym(int m, int k, int base_v = 2) { return qbinom_sym_poly(m, k, base_v); }

/// (c z^d; q^e)_inf to order N via the Euler expansion
/// sum_m (-1)^m p^{m(m-1)/2} (c z^d)^m / (p; p)_m, p = q^e.
inline Series qpoch_infinite_series(const Scalar& prefactor, int zpower, int base_exponent, int order) {
  if (base_exponent < 1) throw std::invalid_argument("infinite q-Pochhammer needs base q^e with e >= 1");
  if (zpower < 1) throw std::invalid_argument("infinite q-Pochhammer needs a positive z power");
  Series s(order);
  const int bv = 2 * base_exponent;
  Scalar cm(1);
  for (int m = 0; m * zpower <= order; ++m) {
    if (m > 0) cm *= prefactor;
    Scalar term = Scalar::fraction(LaurentPoly::v_pow(bv * (m * (m - 1) / 2)), poch_ratio_poly(m, 0, bv));
    term *= cm;
    s.at(m * zpower) = (m % 2 ? -term : term);
  }
  return s;
}

}  // namespace tetra
