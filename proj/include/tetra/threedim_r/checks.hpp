/**
 * @file checks.hpp
 * @brief Involution, transpose symmetries, tetrahedron equation and the
 * boundary vector eigen-relations of the 3d R operator.
 */
#pragma once

#include <map>
#include <sstream>

#include "tetra/report.hpp"
#include "tetra/threedim_r/r_matrix.hpp"

namespace tetra {

inline std::string state_text(const State& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    os << (first ? "" : " + ") << "(" << c.str() << ")|" << to_string(m) << ">";
    first = false;
  }
  return first ? "0" : os.str();
}

/// R(R|i,j,k>) = |i,j,k> for all 0 <= i,j,k <= D.
inline Report check_involution(int D) {
  const std::size_t side = static_cast<std::size_t>(D + 1);
  return parallel_sweep("involution", side * side * side, [&](std::size_t n, Report& rep) {
    const int i = static_cast<int>(n / (side * side));
    const int j = static_cast<int>(n / side % side);
    const int k = static_cast<int>(n % side);
    State v({i, j, k}, Scalar(1));
    State w = r_apply(r_apply(v, 0, 1, 2), 0, 1, 2);
    if (w == v) rep.ok();
    else rep.fail({n, {i, j, k}, "R^2 = 1", state_text(w), state_text(v)});
  });
}

/// Both transpose symmetries on all six indices in [0, range].
inline Report check_symmetries(int range) {
  const std::size_t side = static_cast<std::size_t>(range + 1);
  std::size_t total = 1;
  for (int t = 0; t < 6; ++t) total *= side;
  return parallel_sweep("symmetries", total, [&](std::size_t n, Report& rep) {
    int v[6];
    std::size_t x = n;
    for (int t = 5; t >= 0; --t) {
      v[t] = static_cast<int>(x % side);
      x /= side;
    }
    const auto [a, b, c, i, j, k] = v;
    std::vector<int> idx(v, v + 6);
    Scalar lhs = r_element(a, b, c, i, j, k);
    rep.expect_equal(lhs, r_element(c, b, a, k, j, i), n, idx, "mirror");
    Scalar ratio = Scalar::fraction(poch_poly(4, 4, i) * poch_poly(4, 4, j) * poch_poly(4, 4, k),
                                    poch_poly(4, 4, a) * poch_poly(4, 4, b) * poch_poly(4, 4, c));
    rep.expect_equal(lhs, ratio * r_element(i, j, k, a, b, c), n, idx, "transpose");
  });
}

/// Both sides of R124 R135 R236 R456 = R456 R236 R135 R124 on one basis vector.
inline std::pair<State, State> tetrahedron_sides(const MultiIndex& input) {
  if (input.size() != 6) throw std::invalid_argument("tetrahedron input needs six levels");
  State v(input, Scalar(1));
  State lhs = r_apply(r_apply(r_apply(r_apply(v, 3, 4, 5), 1, 2, 5), 0, 2, 4), 0, 1, 3);
  State rhs = r_apply(r_apply(r_apply(r_apply(v, 0, 1, 3), 0, 2, 4), 1, 2, 5), 3, 4, 5);
  return {std::move(lhs), std::move(rhs)};
}


/// Tetrahedron equation on all inputs with entries in [0, max_level].
inline Report check_tetrahedron(int max_level) {
  const std::size_t side = static_cast<std::size_t>(max_level + 1);
  std::size_t total = 1;
  for (int t = 0; t < 6; ++t) total *= side;
  return parallel_sweep("tetrahedron", total, [&](std::size_t n, Report& rep) {
    MultiIndex in(6);
    std::size_t x = n;
    for (int t = 5; t >= 0; --t) {
      in[static_cast<std::size_t>(t)] = static_cast<int>(x % side);
      x /= side;
    }
    auto [l, r] = tetrahedron_sides(in);
    if (l == r) rep.ok();
    else rep.fail({n, in, "tetrahedron", state_text(l), state_text(r)});
  });
}

// ---------------------------------------------------------------------------
// boundary vectors

enum class Side { ket, bra };

/// Coefficient of |m> (or <m|) in chi_s(z) at z^{m/s}: 1/(q^{s^2})_{m/s}, zero off the lattice.
inline Scalar boundary_coeff(int s, int m) {
  if (s != 1 && s != 2) throw std::invalid_argument("boundary vector kind must be 1 or 2");
  if (m < 0 || m % s) return {};
  return Scalar::fraction(LaurentPoly(1), poch_ratio_poly(m / s, 0, 2 * s * s));
}

/// chi_s(z) truncated at Fock level `cutoff`, coefficients as series in z.
inline VectorState<Series> boundary_vector(int s, Side /*side*/, int cutoff, int order = Series::kDefaultOrder) {
  VectorState<Series> v;
  for (int m = 0; m <= cutoff; m += s) {
    if (m / s > order) break;
    v.add({m}, Series::monomial(boundary_coeff(s, m), {m / s}, order));
  }
  return v;
}

/// Bivariate Laurent polynomial in x, y with Scalar coefficients.
using BiPoly = std::map<std::pair<int, int>, Scalar>;

inline void bipoly_add(BiPoly& p, std::pair<int, int> e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline std::string bipoly_text(const BiPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    os << (first ? "" : " + ") << "(" << c.str() << ")*x^" << e.first << "*y^" << e.second;
    first = false;
  }
  return os.str();
}

/// One component of the eigen-relation for chi_s(x) (x) chi_s(xy) (x) chi_s(y).
/// ket: <a,b,c| of R|chi> against the same component of |chi>.
/// bra: (<chi|R)|a,b,c> against <chi|a,b,c>.
inline std::pair<BiPoly, BiPoly> boundary_eigen_sides(int s, Side side, int a, int b, int c) {
  BiPoly lhs;
  BiPoly rhs;
  // exponents of x and y carried by chi(x) (x) chi(xy) (x) chi(y) at levels (l1, l2, l3)
  auto mono = [s](int l1, int l2, int l3) { return std::pair<int, int>{(l1 + l2) / s, (l2 + l3) / s}; };
  auto chi = [s](int l1, int l2, int l3) { return boundary_coeff(s, l1) * boundary_coeff(s, l2) * boundary_coeff(s, l3); };
  auto pair3 = [](int l1, int l2, int l3) { return pairing(MultiIndex{l1, l2, l3}, MultiIndex{l1, l2, l3}); };
  if (side == Side::ket) {
    // sum over incoming (i,j,k) with i+j = a+b, j+k = b+c
    for (int j = 0; j <= std::min(a + b, b + c); ++j) {
      const int i = a + b - j;
      const int k = b + c - j;
      Scalar w = chi(i, j, k);
      if (w.is_zero()) continue;
      bipoly_add(lhs, mono(i, j, k), r_element(a, b, c, i, j, k) * w);
    }
    bipoly_add(rhs, mono(a, b, c), chi(a, b, c));
  } else {
    // (a,b,c) is the ket label; sum over bra labels (l1,l2,l3) = outgoing triples
    for (int l2 = 0; l2 <= std::min(a + b, b + c); ++l2) {
      const int l1 = a + b - l2;
      const int l3 = b + c - l2;
      Scalar w = chi(l1, l2, l3);
      if (w.is_zero()) continue;
      bipoly_add(lhs, mono(l1, l2, l3), w * pair3(l1, l2, l3) * r_element(l1, l2, l3, a, b, c));
    }
    bipoly_add(rhs, mono(a, b, c), chi(a, b, c) * pair3(a, b, c));
  }
  return {lhs, rhs};
}

/// Eigen-relation on every component (a,b,c) with a+b+c <= degree.
inline Report check_boundary_eigen(int s, Side side, int degree) {
  std::vector<MultiIndex> comps = enumerate_sector(3, {.max_degree = degree});
  return parallel_sweep(std::string("boundary-") + (side == Side::ket ? "ket" : "bra") + "-s" + std::to_string(s),
                        comps.size(), [&](std::size_t n, Report& rep) {
                          const auto& m = comps[n];
                          auto [l, r] = boundary_eigen_sides(s, side, m[0], m[1], m[2]);
                          if (l == r) rep.ok();
                          else rep.fail({n, m, "component", bipoly_text(l), bipoly_text(r)});
                        });
}

}  // namespace tetra
