#pragma once

#include <ostream>
#include <string>

#include "tetra/ring/rational.hpp"

namespace tetra {

/// Element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(std::int64_t re) : re_(re) {}          // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}                   // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] const Rational& re() const noexcept { return re_; }
  [[nodiscard]] const Rational& im() const noexcept { return im_; }
  [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

  [[nodiscard]] GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(i)");
    if (im_.is_zero()) return {Rational(1) / re_, Rational(0)};
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, Rational(0)};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.im_.is_zero()) {
      if (b.re_.is_zero()) throw DivisionByZero("division by zero in Q(i)");
      return {a.re_ / b.re_, a.im_ / b.re_};
    }
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  void add_product(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) {
      re_.add_product(a.re_, b.re_);
      return;
    }
    re_.add_product(a.re_, b.re_);
    re_.add_product(-a.im_, b.im_);
    im_.add_product(a.re_, b.im_);
    im_.add_product(a.im_, b.re_);
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  [[nodiscard]] std::string str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return im_.str() + "*i";
    return "(" + re_.str() + (im_.sign() < 0 ? "" : "+") + im_.str() + "*i)";
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace tetra
