#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nambu {

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator, so zero is 0/1 and structural equality is value equality.
class Rational {
  public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& value);

    /// Accepts "p" or "p/q" with an optional leading sign.
    static Rational from_string(std::string_view text);

    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    int sign() const noexcept { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    /// "p" or "p/q"
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class value_{0};
};

} // namespace nambu
