#include "liebider/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace liebider {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded from the inline range so negation never overflows.
bool fits_inline(i128 v) { return v > kMin && v <= kMax; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    auto x = static_cast<std::uint64_t>(a);
    auto y = static_cast<std::uint64_t>(b);
    while (y != 0) {
      auto t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 mag = uabs(v);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (neg) out = -out;
  return out;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == kMin) {
    assign_mpq(mpq_class(to_mpz(value)));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n == 0) d = 1;
  if (fits_inline(n) && fits_inline(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    assign_mpq(mpq_class(to_mpz(n), to_mpz(d)));
  }
}

Rational::Rational(const mpq_class& value) { assign_mpq(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_mpq(mpq_class value) {
  value.canonicalize();
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t p = from;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    return p;
  };
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t end_num = digits(pos);
  if (end_num == pos) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::size_t end = end_num;
  if (end < text.size() && text[end] == '/') {
    std::size_t end_den = digits(end + 1);
    if (end_den == end + 1) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    end = end_den;
  }
  if (end != text.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  const std::string num_text(text.substr(0, end_num));
  mpz_class num(num_text, 10);
  mpz_class den(1);
  if (end_num != end) {
    den = mpz_class(std::string(text.substr(end_num + 1, end - end_num - 1)), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational out;
  out.assign_mpq(mpq_class(num, den));
  return out;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<signed long>(num_)), mpz_class(static_cast<signed long>(den_)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    *out.big_ = -*out.big_;
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t sum = 0;
      if (!__builtin_add_overflow(num_, rhs.num_, &sum) && sum != kMin) {
        num_ = sum;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) d = 1;
    if (fits_inline(n) && fits_inline(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign_mpq(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return *this;
  }
  assign_mpq(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    // Cross-cancel first so the products are already coprime.
    auto g1 = static_cast<std::int64_t>(gcd128(uabs(num_), static_cast<u128>(rhs.den_)));
    auto g2 = static_cast<std::int64_t>(gcd128(uabs(rhs.num_), static_cast<u128>(den_)));
    i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (fits_inline(n) && fits_inline(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign_mpq(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return *this;
  }
  assign_mpq(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  if (!rhs.big_) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign_mpq(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical representation: inline and big never coincide
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational gcd(const Rational& x, const Rational& y) {
  if (x.is_zero()) return y.abs();
  if (y.is_zero()) return x.abs();
  if (!x.big_ && !y.big_) {
    u128 n = gcd128(uabs(x.num_), uabs(y.num_));
    u128 g = gcd128(static_cast<u128>(x.den_), static_cast<u128>(y.den_));
    u128 d = static_cast<u128>(x.den_) / g * static_cast<u128>(y.den_);
    if (fits_inline(static_cast<i128>(d))) {
      return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
  }
  mpq_class a = x.to_mpq();
  mpq_class b = y.to_mpq();
  mpz_class n;
  mpz_class d;
  mpz_gcd(n.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  auto h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liebider
