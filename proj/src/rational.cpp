#include "salg/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace salg {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

struct RationalOps {
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

  static bool fits(Wide x) { return x >= -static_cast<Wide>(kMax) && x <= static_cast<Wide>(kMax); }
  static UWide magnitude(Wide x) { return x < 0 ? static_cast<UWide>(-x) : static_cast<UWide>(x); }

  static mpz_class to_mpz(Wide x) {
    const UWide m = magnitude(x);
    const std::uint64_t limbs[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (x < 0) z = -z;
    return z;
  }

  static bool to_small(const mpz_class& z, std::int64_t& out) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 63) return false;
    std::uint64_t m = 0;
    mpz_export(&m, nullptr, -1, sizeof m, 0, 0, z.get_mpz_t());
    out = sgn(z) < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
    return true;
  }

  /// Stores num/den, which must already be canonical.
  static void set(Rational& r, Wide num, Wide den) {
    if (num == 0) den = 1;
    if (fits(num) && fits(den)) {
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      r.big_.reset();
      return;
    }
    auto q = std::make_unique<mpq_class>();
    q->get_num() = to_mpz(num);
    q->get_den() = to_mpz(den);
    r.big_ = std::move(q);
  }

  /// Stores a canonical GMP value, inline when it fits.
  static void set(Rational& r, mpq_class q) {
    std::int64_t n = 0, d = 1;
    if (to_small(q.get_num(), n) && to_small(q.get_den(), d)) {
      r.num_ = n;
      r.den_ = d;
      r.big_.reset();
      return;
    }
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }

  static mpq_class to_mpq(const Rational& r) {
    if (r.big_) return *r.big_;
    mpq_class q;
    q.get_num() = to_mpz(r.num_);
    q.get_den() = to_mpz(r.den_);
    return q;
  }

  /// r += c/d with the gcd tricks that keep intermediates small.
  static void add(Rational& r, Wide c, std::int64_t d) {
    const std::int64_t a = r.num_, b = r.den_;
    if (b == 1 && d == 1) return set(r, Wide(a) + c, 1);
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(d));
    if (g == 1) return set(r, Wide(a) * d + c * b, Wide(b) * d);
    const Wide t = Wide(a) * (d / static_cast<std::int64_t>(g)) + c * (b / static_cast<std::int64_t>(g));
    if (t == 0) return set(r, 0, 1);
    const std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(magnitude(t) % g), g);
    set(r, t / static_cast<Wide>(g2), Wide(b / static_cast<std::int64_t>(g)) * (d / static_cast<std::int64_t>(g2)));
  }

  static void mul(Rational& r, std::int64_t c, std::int64_t d) {
    const std::int64_t a = r.num_, b = r.den_;
    if (a == 0 || c == 0) return set(r, 0, 1);
    const auto g1 = static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(magnitude(a)), static_cast<std::uint64_t>(d)));
    const auto g2 = static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(magnitude(c)), static_cast<std::uint64_t>(b)));
    set(r, Wide(a / g1) * (c / g2), Wide(b / g2) * (d / g1));
  }
};

Rational::Rational(long value) { RationalOps::set(*this, value, 1); }

Rational::Rational(long long value) { RationalOps::set(*this, value, 1); }

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) throw ArithmeticError("rational with zero denominator");
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  RationalOps::set(*this, std::move(q));
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  Wide n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const auto g = std::gcd(static_cast<std::uint64_t>(RationalOps::magnitude(n)), static_cast<std::uint64_t>(d));
  RationalOps::set(*this, n / static_cast<Wide>(g), d / static_cast<Wide>(g));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : RationalOps::to_mpz(num_); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : RationalOps::to_mpz(den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    RationalOps::add(*this, rhs.num_, rhs.den_);
  } else {
    RationalOps::set(*this, RationalOps::to_mpq(*this) + RationalOps::to_mpq(rhs));
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    RationalOps::add(*this, -Wide(rhs.num_), rhs.den_);
  } else {
    RationalOps::set(*this, RationalOps::to_mpq(*this) - RationalOps::to_mpq(rhs));
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    RationalOps::mul(*this, rhs.num_, rhs.den_);
  } else {
    RationalOps::set(*this, RationalOps::to_mpq(*this) * RationalOps::to_mpq(rhs));
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  return *this *= rhs.inverse();
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (r.big_) {
    mpq_neg(r.big_->get_mpq_t(), r.big_->get_mpq_t());
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  Rational r;
  if (big_) {
    mpq_class q;
    mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
    RationalOps::set(r, std::move(q));
  } else {
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
  }
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
  return RationalOps::to_mpq(a) < RationalOps::to_mpq(b);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  return pos;
}

}  // namespace

Rational rational_parse(std::string_view text) {
  std::size_t pos = 0;
  if (text.empty()) throw RationalParseError("empty rational", 0);
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::size_t num_end = scan_digits(text, pos);
  if (num_end == pos) throw RationalParseError("expected digit", pos);
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  if (negative) num = -num;
  pos = num_end;
  mpz_class den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') throw RationalParseError("unexpected character", pos);
    ++pos;
    if (pos >= text.size()) throw RationalParseError("expected denominator", pos);
    if (text[pos] == '0') throw RationalParseError("zero or zero-padded denominator", pos);
    std::size_t den_end = scan_digits(text, pos);
    if (den_end == pos) throw RationalParseError("expected digit", pos);
    if (den_end != text.size()) throw RationalParseError("unexpected character", den_end);
    den = mpz_class(std::string(text.substr(pos, den_end - pos)), 10);
  }
  return Rational(std::move(num), std::move(den));
}

std::string rational_format(const Rational& r) {
  std::string out = r.numerator().get_str();
  if (!r.is_integer()) {
    out += '/';
    out += r.denominator().get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << rational_format(r); }

}  // namespace salg

std::size_t std::hash<salg::Rational>::operator()(const salg::Rational& r) const noexcept {
  std::size_t h = mpz_get_ui(r.numerator().get_mpz_t());
  h ^= mpz_get_ui(r.denominator().get_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  return h ^ static_cast<std::size_t>(r.sign() + 1);
}
