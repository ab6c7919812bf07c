#pragma once

// Exact rational numbers with arbitrary-precision numerator and denominator.
// Small values are stored inline and only fall back to GMP when they grow.
//
// Values are always canonical: denominator > 0, gcd(|num|, den) = 1 and zero
// is 0/1. Every constructor and operator restores that form, so two equal
// rationals are also equal field-by-field.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace salg {

/// Raised on division by zero and other undefined arithmetic.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by rational_parse; `position` is the 0-based offset of the
/// offending character in the input text.
class RationalParseError : public std::invalid_argument {
 public:
  RationalParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Rational {
 public:
  Rational() = default;
  Rational(int value) : num_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long value);                  // NOLINT(google-explicit-constructor)
  Rational(long long value);             // NOLINT(google-explicit-constructor)
  Rational(mpz_class num, mpz_class den);
  Rational(long long num, long long den);

  Rational(const Rational& other)
      : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  mpz_class numerator() const;
  mpz_class denominator() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const noexcept { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    // the representation is unique, so mixed forms never compare equal
    return a.big_ && b.big_ && *a.big_ == *b.big_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const;

 private:
  // Values with |num|, den < 2^63 live inline in num_/den_ and big_ is empty;
  // anything larger lives in big_. Both forms are kept canonical.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  friend struct RationalOps;
};

Rational abs(const Rational& r);

/// Parses `-?[0-9]+(/[1-9][0-9]*)?`; anything else throws RationalParseError.
Rational rational_parse(std::string_view text);

/// Canonical text form; integers print without "/1".
std::string rational_format(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace salg

template <>
struct std::hash<salg::Rational> {
  std::size_t operator()(const salg::Rational& r) const noexcept;
};

namespace Eigen {

template <>
struct NumTraits<salg::Rational> : GenericNumTraits<salg::Rational> {
  using Real = salg::Rational;
  using NonInteger = salg::Rational;
  using Literal = salg::Rational;
  using Nested = salg::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 32
  };

  // Exact arithmetic: tolerance-based helpers must compare with zero slack.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
