#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dsum {

using BigInt = boost::multiprecision::cpp_int;

BigInt to_big(__int128 v);
/// Throws std::overflow_error if v does not fit.
__int128 to_i128(const BigInt& v);
std::string to_string(const BigInt& v);

/// Reduced fraction with positive denominator; canonical zero is 0/1.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& num, const BigInt& den);

    BigInt numerator() const;
    BigInt denominator() const;
    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    ExactRational operator-() const { ExactRational r; r.value_ = -value_; return r; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

    /// "num/den", or "num" when den = 1.
    std::string str() const;
    /// Inverse of str(); also accepts non-reduced input such as "6/4".
    static ExactRational parse(std::string_view text);

    /// Truncated (toward zero) decimal expansion with `places` digits after the point.
    std::string decimal(int places) const;
    double to_double() const;

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace dsum
