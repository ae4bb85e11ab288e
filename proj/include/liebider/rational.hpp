#ifndef LIEBIDER_RATIONAL_HPP
#define LIEBIDER_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace liebider {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// kept inline; anything larger is promoted to a GMP rational. The
/// representation is canonical: a value is stored inline whenever it fits,
/// so equality and hashing never depend on how a value was produced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational& operator=(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0).
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  std::string str() const;
  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// gcd(a/b, c/d) = gcd(a, c) / lcm(b, d); dividing a row by the gcd of
  /// its entries yields a primitive integer row. gcd(0, 0) = 0.
  friend Rational gcd(const Rational& x, const Rational& y);

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  std::size_t hash() const;

 private:
  void assign_mpq(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace liebider

template <>
struct std::hash<liebider::Rational> {
  std::size_t operator()(const liebider::Rational& r) const noexcept { return r.hash(); }
};

#endif  // LIEBIDER_RATIONAL_HPP
