/**
 * @file rational.hpp
 * @brief Arbitrary precision rationals with an inline int64 fast path.
 *
 * Almost every coefficient produced by the 3d R machinery is a small integer,
 * so values are held as a machine integer until an operation overflows, at
 * which point they are promoted to a GMP rational. Results that become small
 * integers again are demoted.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tetra {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& q) { assign_big(q); }
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign_big(q);
  }

  Rational(const Rational& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q" (decimal, optional sign).
  static Rational parse(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }
  [[nodiscard]] bool is_integer() const { return !big_ || big_->get_den() == 1; }
  [[nodiscard]] int sign() const { return big_ ? sgn(*big_) : (small_ > 0) - (small_ < 0); }

  [[nodiscard]] mpq_class to_mpq() const {
    return big_ ? *big_ : mpq_class(mpz_class(static_cast<long>(small_)));
  }
  [[nodiscard]] mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(small_)); }
  [[nodiscard]] mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(1); }

  [[nodiscard]] std::string str() const { return big_ ? big_->get_str() : std::to_string(small_); }

  Rational operator-() const {
    if (!big_ && small_ != INT64_MIN) return Rational(-small_);
    return Rational(mpq_class(-to_mpq()));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Rational(r);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      std::int64_t r;
      if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Rational(r);
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      std::int64_t r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Rational(r);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    if (!a.big_ && !b.big_ && b.small_ != -1 && a.small_ % b.small_ == 0) return Rational(a.small_ / b.small_);
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }
  Rational& operator+=(const Rational& b) {
    std::int64_t r;
    if (!big_ && !b.big_ && !__builtin_add_overflow(small_, b.small_, &r)) {
      small_ = r;
      return *this;
    }
    return *this = *this + b;
  }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  /// this += a * b, the inner loop of polynomial multiplication.
  void add_product(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_) {
      std::int64_t p;
      std::int64_t s;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &s)) {
        small_ = s;
        return;
      }
    }
    *this = Rational(mpq_class(to_mpq() + a.to_mpq() * b.to_mpq()));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value is never a small integer
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_;
    return a.to_mpq() < b.to_mpq();
  }

  /// Residue modulo an odd prime p; returns false when p divides the denominator.
  bool mod_prime(std::uint64_t p, std::uint64_t& out) const {
    if (!big_) {
      auto r = small_ % static_cast<std::int64_t>(p);
      if (r < 0) r += static_cast<std::int64_t>(p);
      out = static_cast<std::uint64_t>(r);
      return true;
    }
    mpz_class m(std::to_string(p));
    mpz_class n = big_->get_num() % m;
    if (n < 0) n += m;
    mpz_class d = big_->get_den() % m;
    if (d == 0) return false;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    mpz_class r = (n * inv) % m;
    out = std::stoull(r.get_str());
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void assign_big(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
      small_ = q.get_num().get_si();
      big_.reset();
    } else {
      small_ = 0;
      big_ = std::make_unique<mpq_class>(q);
    }
  }

  std::int64_t small_ = 0;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace tetra
