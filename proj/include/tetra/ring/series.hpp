/**
 * @file series.hpp
 * @brief Truncated power series over Scalar in one (z) or two (x, y) variables.
 *
 * Coefficients are stored densely. In two variables the monomial x^i y^j with
 * i + j <= N sits at position d(d+1)/2 + j, d = i + j.
 */
#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/ring/scalar.hpp"

namespace tetra {

template <int V>
class TruncatedSeries {
  static_assert(V == 1 || V == 2, "one or two spectral variables");

 public:
  using Exps = std::array<int, V>;
  static constexpr int kDefaultOrder = 8;

  explicit TruncatedSeries(int order = kDefaultOrder) : order_(order), c_(size_for(order)) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }
  TruncatedSeries(const Scalar& constant, int order) : TruncatedSeries(order) { c_[0] = constant; }

  /// c * z^e (or c * x^e0 y^e1); zero if beyond the order.
  static TruncatedSeries monomial(const Scalar& c, Exps e, int order) {
    TruncatedSeries s(order);
    if (in_range(e, order)) s.c_[index(e)] = c;
    return s;
  }

  /// Series expansion of a rational function num(z)/den(z) given as coefficient lists.
  static TruncatedSeries rational(const std::vector<Scalar>& num, const std::vector<Scalar>& den, int order)
    requires(V == 1)
  {
    TruncatedSeries a(order);
    TruncatedSeries b(order);
    for (int k = 0; k < static_cast<int>(num.size()) && k <= order; ++k) a.c_[static_cast<std::size_t>(k)] = num[static_cast<std::size_t>(k)];
    for (int k = 0; k < static_cast<int>(den.size()) && k <= order; ++k) b.c_[static_cast<std::size_t>(k)] = den[static_cast<std::size_t>(k)];
    return a / b;
  }

  [[nodiscard]] int order() const noexcept { return order_; }

  [[nodiscard]] const Scalar& coeff(Exps e) const {
    static const Scalar zero;
    return in_range(e, order_) ? c_[index(e)] : zero;
  }
  [[nodiscard]] const Scalar& coeff(int e) const
    requires(V == 1)
  {
    return coeff(Exps{e});
  }
  Scalar& at(Exps e) {
    if (!in_range(e, order_)) throw std::out_of_range("series exponent beyond order");
    return c_[index(e)];
  }
  Scalar& at(int e)
    requires(V == 1)
  {
    return at(Exps{e});
  }
  [[nodiscard]] const std::vector<Scalar>& raw() const noexcept { return c_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Calls f(exps, coeff) for every nonzero coefficient in graded order.
  template <typename F>
  void for_each_term(F&& f) const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!c_[k].is_zero()) f(exps_of(k), c_[k]);
  }

  [[nodiscard]] TruncatedSeries truncated(int order) const {
    TruncatedSeries r(order);
    for (std::size_t k = 0; k < c_.size() && k < r.c_.size(); ++k) r.c_[k] = c_[k];
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a.truncated(std::min(a.order_, b.order_));
    for (std::size_t k = 0; k < r.c_.size(); ++k)
      if (!b.c_[k].is_zero()) r.c_[k] += b.c_[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    const std::size_t len = r.c_.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (a.c_[i].is_zero()) continue;
      Exps ei = exps_of(i);
      for (std::size_t j = 0; j < len; ++j) {
        if (b.c_[j].is_zero()) continue;
        Exps ej = exps_of(j);
        Exps s;
        for (int t = 0; t < V; ++t) s[static_cast<std::size_t>(t)] = ei[static_cast<std::size_t>(t)] + ej[static_cast<std::size_t>(t)];
        if (!in_range(s, n)) continue;
        r.c_[index(s)].add_product(a.c_[i], b.c_[j]);
      }
    }
    return r;
  }

  friend TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    if (s.is_one()) return r;
    for (auto& x : r.c_)
      if (!x.is_zero()) x = s * x;
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const Scalar& s) { return s * a; }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.c_[0].is_zero()) throw DivisionByZero("series division: constant term of divisor is zero");
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    const Scalar inv = b.c_[0].inverse();
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      Scalar acc = a.c_[k];
      Exps ek = exps_of(k);
      for (std::size_t j = 1; j < r.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        Exps ej = exps_of(j);
        Exps d;
        bool ok = true;
        for (int t = 0; t < V; ++t) {
          d[static_cast<std::size_t>(t)] = ek[static_cast<std::size_t>(t)] - ej[static_cast<std::size_t>(t)];
          if (d[static_cast<std::size_t>(t)] < 0) ok = false;
        }
        if (!ok) continue;
        const Scalar& prev = r.c_[index(d)];
        if (!prev.is_zero()) acc -= b.c_[j] * prev;
      }
      r.c_[k] = acc * inv;
    }
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
  TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

  /// this += s * b (orders must agree); the accumulation kernel of operator products.
  void add_scaled(const Scalar& s, const TruncatedSeries& b) {
    const std::size_t len = std::min(c_.size(), b.c_.size());
    for (std::size_t k = 0; k < len; ++k)
      if (!b.c_[k].is_zero()) c_[k].add_product(s, b.c_[k]);
  }

  /// Multiplication by z^k (k >= 0), dropping terms past the order.
  [[nodiscard]] TruncatedSeries shifted(int k) const
    requires(V == 1)
  {
    if (k < 0) throw std::invalid_argument("negative shift of a power series");
    TruncatedSeries r(order_);
    for (int e = 0; e + k <= order_; ++e) r.c_[static_cast<std::size_t>(e + k)] = c_[static_cast<std::size_t>(e)];
    return r;
  }

  /// Substitution z -> z^k (k >= 1).
  [[nodiscard]] TruncatedSeries dilated(int k) const
    requires(V == 1)
  {
    TruncatedSeries r(order_);
    for (int e = 0; e * k <= order_; ++e) r.c_[static_cast<std::size_t>(e * k)] = c_[static_cast<std::size_t>(e)];
    return r;
  }

  /// Substitution z -> x^ax y^ay into a bivariate series of the given order.
  [[nodiscard]] TruncatedSeries<2> embed(int ax, int ay, int order) const
    requires(V == 1)
  {
    if ((ax + ay) * order_ < order) throw std::invalid_argument("embed: source order too small for target order");
    TruncatedSeries<2> r(order);
    for (int e = 0; e <= order_; ++e) {
      std::array<int, 2> t{e * ax, e * ay};
      if (t[0] + t[1] > order) break;
      if (!c_[static_cast<std::size_t>(e)].is_zero()) r.at(t) = c_[static_cast<std::size_t>(e)];
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t len = std::min(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < len; ++k)
      if (a.c_[k] != b.c_[k]) return false;
    return true;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    bool first = true;
    for_each_term([&](Exps e, const Scalar& c) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      static constexpr const char* kNames1[] = {"z"};
      static constexpr const char* kNames2[] = {"x", "y"};
      for (int t = 0; t < V; ++t) {
        int p = e[static_cast<std::size_t>(t)];
        if (p == 0) continue;
        os << "*" << (V == 1 ? kNames1[0] : kNames2[t]);
        if (p != 1) os << "^" << p;
      }
    });
    if (first) os << "0";
    os << " + O(" << order_ + 1 << ")";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

  static std::size_t size_for(int order) {
    const auto n = static_cast<std::size_t>(order + 1);
    return V == 1 ? n : n * (n + 1) / 2;
  }

 private:
  static bool in_range(const Exps& e, int order) {
    int tot = 0;
    for (int x : e) {
      if (x < 0) return false;
      tot += x;
    }
    return tot <= order;
  }
  static std::size_t index(const Exps& e) {
    if constexpr (V == 1) {
      return static_cast<std::size_t>(e[0]);
    } else {
      const auto d = static_cast<std::size_t>(e[0] + e[1]);
      return d * (d + 1) / 2 + static_cast<std::size_t>(e[1]);
    }
  }
  static Exps exps_of(std::size_t k) {
    if constexpr (V == 1) {
      return Exps{static_cast<int>(k)};
    } else {
      std::size_t d = 0;
      while ((d + 1) * (d + 2) / 2 <= k) ++d;
      const std::size_t j = k - d * (d + 1) / 2;
      return Exps{static_cast<int>(d - j), static_cast<int>(j)};
    }
  }

  int order_;
  std::vector<Scalar> c_;
};

using Series = TruncatedSeries<1>;
using BiSeries = TruncatedSeries<2>;

}  // namespace tetra
