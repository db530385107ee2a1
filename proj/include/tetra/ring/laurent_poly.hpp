/**
 * @file laurent_poly.hpp
 * @brief Laurent polynomials in v with Q(i) coefficients.
 *
 * The variable v is the square root of the quantum parameter: q = v^2, so
 * expressions in q^{1/2} and q embed as odd and even exponents. Storage is
 * dense between the lowest and highest nonzero exponent.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tetra/ring/gaussian_rational.hpp"

namespace tetra {

class LaurentPoly {
 public:
  using Coeff = GaussianRational;

  LaurentPoly() = default;
  LaurentPoly(Coeff c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  LaurentPoly(std::int64_t c) : LaurentPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Coeff(c)) {}           // NOLINT(google-explicit-constructor)

  /// Builds from coefficients of v^low, v^{low+1}, ...
  LaurentPoly(int low, std::vector<Coeff> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

  static LaurentPoly monomial(Coeff c, int exp) {
    LaurentPoly p(std::move(c));
    if (!p.is_zero()) p.low_ = exp;
    return p;
  }
  /// v^e
  static LaurentPoly v_pow(int e) { return monomial(Coeff(1), e); }
  /// q^e = v^{2e}
  static LaurentPoly q_pow(int e) { return monomial(Coeff(1), 2 * e); }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] bool is_one() const noexcept { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0].is_one(); }
  [[nodiscard]] bool is_constant() const noexcept { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
  [[nodiscard]] bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  [[nodiscard]] bool is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c.is_real(); });
  }

  /// Lowest exponent; meaningless for the zero polynomial.
  [[nodiscard]] int low() const noexcept { return low_; }
  [[nodiscard]] int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high() - low(), the degree of the polynomial part.
  [[nodiscard]] int span() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

  [[nodiscard]] const Coeff& lead() const { return coeffs_.back(); }
  [[nodiscard]] const Coeff& trail() const { return coeffs_.front(); }
  [[nodiscard]] const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] Coeff coeff(int e) const {
    if (is_zero() || e < low_ || e > high()) return Coeff();
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  /// Calls f(exponent, coefficient) for each nonzero term in increasing order.
  template <typename F>
  void for_each_term(F&& f) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) f(low_ + static_cast<int>(k), coeffs_[k]);
  }

  /// Multiplication by v^k.
  [[nodiscard]] LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  [[nodiscard]] LaurentPoly conj() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = c.conj();
    return r;
  }

  /// Substitutes v -> v^k (k > 0).
  [[nodiscard]] LaurentPoly dilated(int k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<Coeff> out(static_cast<std::size_t>(span() * k + 1));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j * static_cast<std::size_t>(k)] = coeffs_[j];
    return {low_ * k, std::move(out)};
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    int lo = std::min(low_, b.low_);
    int hi = std::max(high(), b.high());
    if (lo < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Coeff());
      low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
      coeffs_[static_cast<std::size_t>(b.low_ - low_) + k] += b.coeffs_[k];
    trim();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this += -b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return a.scaled(b.coeffs_[0]).shifted(b.low_);
    if (a.is_monomial()) return b.scaled(a.coeffs_[0]).shifted(a.low_);
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
    return {a.low_ + b.low_, std::move(out)};
  }

  [[nodiscard]] LaurentPoly scaled(const Coeff& c) const {
    if (c.is_zero()) return {};
    if (c.is_one()) return *this;
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
  }

  [[nodiscard]] LaurentPoly pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    if (a.is_zero()) return true;
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Polynomial part: divides out v^low so the constant term is nonzero.
  [[nodiscard]] LaurentPoly poly_part() const { return shifted(-low_); }

  /// Makes the leading coefficient one.
  [[nodiscard]] LaurentPoly monic() const { return is_zero() ? *this : scaled(lead().inverse()); }

  /// Division with remainder of ordinary polynomials: a = q*b + r with
  /// deg r < deg b. Requires low() >= 0 for a and low() == 0 for b.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero() || a.high() < b.high()) return {LaurentPoly(), a};
    std::vector<Coeff> rem(static_cast<std::size_t>(a.high() + 1));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) rem[static_cast<std::size_t>(a.low_) + k] = a.coeffs_[k];
    const std::size_t db = static_cast<std::size_t>(b.high());
    const Coeff inv = b.lead().inverse();
    const bool unit_lead = b.lead().is_one();
    const std::size_t qlen = rem.size() - db;
    std::vector<Coeff> quo(qlen);
    for (std::size_t k = qlen; k-- > 0;) {
      Coeff& top = rem[k + db];
      if (top.is_zero()) continue;
      Coeff f = unit_lead ? top : top * inv;
      Coeff nf = -f;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j].add_product(nf, b.coeffs_[j]);
      quo[k] = std::move(f);
    }
    rem.resize(db);
    return {LaurentPoly(0, std::move(quo)), LaurentPoly(0, std::move(rem))};
  }

  /// Exact quotient a / b of Laurent polynomials, or nullopt if b does not divide a.
  static std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return LaurentPoly();
    LaurentPoly ap = a.poly_part();
    LaurentPoly bp = b.poly_part();
    if (ap.span() < bp.span()) return std::nullopt;
    auto [q, r] = divmod(ap, bp);
    if (!r.is_zero()) return std::nullopt;
    return q.shifted(a.low_ - b.low_);
  }

  /// Monic gcd of the polynomial parts (always has nonzero constant term).
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    a = a.poly_part();
    b = b.poly_part();
    if (a.is_zero()) return b.is_zero() ? LaurentPoly(1) : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.span() < b.span()) std::swap(a, b);
    while (!b.is_zero()) {
      if (b.span() == 0) return LaurentPoly(1);
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = r.is_zero() ? r : r.poly_part().monic();
    }
    return a.monic();
  }

  /// Evaluates at v = omega modulo the prime p with i -> imod.
  /// Returns nullopt if a coefficient denominator vanishes mod p.
  [[nodiscard]] std::optional<std::uint64_t> eval_mod(std::uint64_t p, std::uint64_t omega, std::uint64_t imod) const {
    auto mul = [p](std::uint64_t x, std::uint64_t y) {
      return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
    };
    std::uint64_t acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      std::uint64_t re = 0;
      std::uint64_t im = 0;
      if (!coeffs_[k].re().mod_prime(p, re)) return std::nullopt;
      if (!coeffs_[k].im().mod_prime(p, im)) return std::nullopt;
      std::uint64_t c = (re + mul(im, imod)) % p;
      acc = (mul(acc, omega) + c) % p;
    }
    return acc;  // the v^low factor is a unit and does not affect vanishing
  }

  [[nodiscard]] std::string str(const char* var = "v") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Coeff& c = coeffs_[k];
      if (c.is_zero()) continue;
      int e = low_ + static_cast<int>(k);
      std::string cs = c.str();
      bool neg = c.is_real() && c.re().sign() < 0;
      if (neg) cs = (-c).str();
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      if (e == 0) {
        os << cs;
        continue;
      }
      if (cs != "1") os << cs << "*";
      os << var;
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  void trim() {
    std::size_t b = 0;
    while (b < coeffs_.size() && coeffs_[b].is_zero()) ++b;
    if (b == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t e = coeffs_.size();
    while (coeffs_[e - 1].is_zero()) --e;
    if (b > 0 || e < coeffs_.size()) {
      coeffs_ = std::vector<Coeff>(std::make_move_iterator(coeffs_.begin() + static_cast<std::ptrdiff_t>(b)),
                                   std::make_move_iterator(coeffs_.begin() + static_cast<std::ptrdiff_t>(e)));
      low_ += static_cast<int>(b);
    }
  }

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

}  // namespace tetra
