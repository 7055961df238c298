#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "moorecat/errors.hpp"

namespace moorecat {

// Exact rational backed by GMP. Always in lowest terms with a positive
// denominator, so structural equality is numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw validation_error("rational: zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "n" or "p/q" with an optional leading '-'; q must be nonzero.
  static Rational parse(std::string_view text) {
    auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
      throw validation_error("rational: malformed literal \"" + std::string(text) + "\" (expected \"n\" or \"p/q\")");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw validation_error("rational: zero denominator in \"" + std::string(text) + "\"");
    if (text.front() == '-') n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  [[nodiscard]] std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  [[nodiscard]] const mpq_class& raw() const noexcept { return q_; }
  [[nodiscard]] int sign() const noexcept { return sgn(q_); }
  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw domain_error("rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

// An object of the reparametrization category: a strictly positive length.
class Length {
 public:
  explicit Length(Rational v) : v_(std::move(v)) {
    if (v_.sign() <= 0) throw validation_error("length must be > 0, got " + v_.str());
  }
  Length(std::int64_t n) : Length(Rational(n)) {}  // NOLINT(implicit)
  Length(std::int64_t num, std::int64_t den) : Length(Rational(num, den)) {}

  static Length parse(std::string_view text) { return Length(Rational::parse(text)); }

  [[nodiscard]] const Rational& value() const noexcept { return v_; }
  operator const Rational&() const noexcept { return v_; }  // NOLINT(implicit)
  [[nodiscard]] std::string str() const { return v_.str(); }

  friend Length operator+(const Length& a, const Length& b) { return Length(a.v_ + b.v_); }
  friend Rational operator-(const Length& a, const Length& b) { return a.v_ - b.v_; }
  friend bool operator==(const Length& a, const Length& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Length& a, const Length& b) { return a.v_ <=> b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Length& l) { return os << l.v_; }

 private:
  Rational v_;
};

}  // namespace moorecat
