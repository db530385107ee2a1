/**
 * @file scalar.hpp
 * @brief Fraction field of Q(i)[v, 1/v], v^2 = q.
 *
 * A Scalar is num/den with gcd(num, den) = 1 and den a monic polynomial with
 * nonzero constant term. The denominator is stored as a product of cyclotomic
 * polynomials times a cofactor `rest`; the expanded polynomial is only formed
 * when needed (output, generic gcd fallback, equality of differently factored
 * denominators).
 */
#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "tetra/ring/cyclotomic.hpp"
#include "tetra/ring/laurent_poly.hpp"

namespace tetra {

class Scalar {
 public:
  using Coeff = GaussianRational;

  Scalar() = default;
  Scalar(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Coeff c) : num_(std::move(c)) {}        // NOLINT(google-explicit-constructor)
  Scalar(Rational c) : num_(Coeff(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t c) : num_(c) {}            // NOLINT(google-explicit-constructor)
  Scalar(int c) : num_(c) {}                     // NOLINT(google-explicit-constructor)

  /// num / den for arbitrary nonzero den.
  static Scalar fraction(LaurentPoly num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero("scalar with zero denominator");
    Scalar r;
    if (num.is_zero()) return r;
    Coeff lead_inv = den.lead().inverse();
    r.num_ = num.scaled(lead_inv).shifted(-den.low());
    auto [f, rest] = cyclo::factor(den.poly_part().scaled(lead_inv));
    r.cyc_ = std::move(f);
    r.rest_ = std::move(rest);
    r.reduce();
    return r;
  }

  static Scalar v_pow(int e) { return LaurentPoly::v_pow(e); }
  static Scalar q_pow(int e) { return LaurentPoly::q_pow(e); }
  static Scalar i() { return Coeff::i(); }

  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const noexcept { return num_.is_one() && den_is_one(); }
  /// True when the denominator is 1.
  [[nodiscard]] bool is_laurent() const noexcept { return den_is_one(); }

  [[nodiscard]] const LaurentPoly& num() const noexcept { return num_; }
  [[nodiscard]] LaurentPoly den() const { return den_is_one() ? LaurentPoly(1) : cyclo::expand(cyc_) * rest_; }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_is_one() && b.den_is_one()) return Scalar(a.num_ * b.num_);
    Scalar r;
    r.num_ = a.num_ * b.num_;
    r.cyc_ = merge(a.cyc_, b.cyc_, [](int x, int y) { return x + y; });
    r.rest_ = a.rest_ * b.rest_;
    r.reduce();
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_is_one() && b.den_is_one()) return Scalar(a.num_ + b.num_);
    Scalar r;
    if (a.cyc_ == b.cyc_ && a.rest_ == b.rest_) {
      r.num_ = a.num_ + b.num_;
      r.cyc_ = a.cyc_;
      r.rest_ = a.rest_;
      r.reduce();
      return r;
    }
    r.cyc_ = merge(a.cyc_, b.cyc_, [](int x, int y) { return std::max(x, y); });
    LaurentPoly ma = cofactor(r.cyc_, a.cyc_);
    LaurentPoly mb = cofactor(r.cyc_, b.cyc_);
    if (a.rest_ == b.rest_) {
      r.rest_ = a.rest_;
    } else {
      LaurentPoly g = LaurentPoly::gcd(a.rest_, b.rest_);
      LaurentPoly ra = *LaurentPoly::exact_div(a.rest_, g);
      LaurentPoly rb = *LaurentPoly::exact_div(b.rest_, g);
      r.rest_ = a.rest_ * rb;
      ma *= rb;
      mb *= ra;
    }
    r.num_ = a.num_ * ma + b.num_ * mb;
    r.reduce();
    return r;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  [[nodiscard]] Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return fraction_coprime(den(), num_);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("scalar division by zero");
    if (b.num_.is_monomial() && b.den_is_one()) {
      Scalar r = a;
      r.num_ = a.num_.scaled(b.num_.lead().inverse()).shifted(-b.num_.low());
      return r;
    }
    return a * b.inverse();
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// this += a * b
  void add_product(const Scalar& a, const Scalar& b) {
    if (den_is_one() && a.den_is_one() && b.den_is_one()) {
      num_ += a.num_ * b.num_;
      return;
    }
    *this += a * b;
  }

  [[nodiscard]] Scalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1);
    Scalar base = *this;
    auto u = static_cast<unsigned>(e);
    while (u) {
      if (u & 1U) r *= base;
      u >>= 1U;
      if (u) base *= base;
    }
    return r;
  }

  /// Complex conjugation of coefficients (i -> -i), v fixed.
  [[nodiscard]] Scalar conj() const {
    Scalar r;
    if (is_zero()) return r;
    return fraction(num_.conj(), den().conj());
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.num_ != b.num_) return false;
    if (a.cyc_ == b.cyc_ && a.rest_ == b.rest_) return true;
    return a.den() == b.den();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  [[nodiscard]] std::string str(const char* var = "v") const {
    if (den_is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den().str(var) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  [[nodiscard]] bool den_is_one() const noexcept { return cyc_.empty() && rest_.is_one(); }

  template <typename Op>
  static cyclo::Factors merge(const cyclo::Factors& a, const cyclo::Factors& b, Op op) {
    cyclo::Factors out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back(b[j++]);
      } else {
        out.emplace_back(a[i].first, op(a[i].second, b[j].second));
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Product of Phi_d^{full_d - part_d}.
  static LaurentPoly cofactor(const cyclo::Factors& full, const cyclo::Factors& part) {
    LaurentPoly r(1);
    std::size_t j = 0;
    for (auto [d, e] : full) {
      int have = 0;
      while (j < part.size() && part[j].first < d) ++j;
      if (j < part.size() && part[j].first == d) have = part[j].second;
      if (e > have) r *= cyclo::phi(d).pow(static_cast<unsigned>(e - have));
    }
    return r;
  }

  /// num / den where the caller guarantees gcd(num, den) = 1.
  static Scalar fraction_coprime(const LaurentPoly& num, const LaurentPoly& den) {
    Scalar r;
    Coeff lead_inv = den.lead().inverse();
    r.num_ = num.scaled(lead_inv).shifted(-den.low());
    auto [f, rest] = cyclo::factor(den.poly_part().scaled(lead_inv));
    r.cyc_ = std::move(f);
    r.rest_ = std::move(rest);
    return r;
  }

  void reduce() {
    if (num_.is_zero()) {
      cyc_.clear();
      rest_ = LaurentPoly(1);
      return;
    }
    bool generic = false;
    for (auto& [d, e] : cyc_) {
      while (e > 0) {
        auto qt = cyclo::divide_out(num_, d);
        if (!qt) break;
        num_ = std::move(*qt);
        --e;
      }
      if (e > 0 && d % 4 == 0 && !num_.is_real()) generic = true;
    }
    cyc_.erase(std::remove_if(cyc_.begin(), cyc_.end(), [](const auto& p) { return p.second == 0; }), cyc_.end());
    if (generic) {
      LaurentPoly d = den();
      LaurentPoly g = LaurentPoly::gcd(num_, d);
      if (!g.is_one()) {
        *this = fraction_coprime(*LaurentPoly::exact_div(num_, g), *LaurentPoly::exact_div(d, g));
      }
      return;
    }
    if (!rest_.is_one()) {
      LaurentPoly g = LaurentPoly::gcd(num_, rest_);
      if (!g.is_one()) {
        num_ = *LaurentPoly::exact_div(num_, g);
        rest_ = *LaurentPoly::exact_div(rest_, g);
      }
    }
  }

  LaurentPoly num_;
  cyclo::Factors cyc_;
  LaurentPoly rest_ = LaurentPoly(1);
};

}  // namespace tetra
