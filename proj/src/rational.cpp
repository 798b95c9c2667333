#include "dsum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dsum {

BigInt to_big(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

__int128 to_i128(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 126;
    if (abs(v) >= lim) throw std::overflow_error("integer does not fit in 128 bits");
    const bool neg = v < 0;
    BigInt a = abs(v);
    const auto hi = static_cast<std::uint64_t>(a >> 64);
    const auto lo = static_cast<std::uint64_t>(a & std::numeric_limits<std::uint64_t>::max());
    __int128 r = (static_cast<__int128>(hi) << 64) | lo;
    return neg ? -r : r;
}

std::string to_string(const BigInt& v) { return v.str(); }

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

BigInt ExactRational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt ExactRational::denominator() const { return boost::multiprecision::denominator(value_); }

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExactRational::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

ExactRational ExactRational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad integer");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_int(text));
    return ExactRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string ExactRational::decimal(int places) const {
    const BigInt num = numerator(), den = denominator();
    BigInt a = abs(num);
    BigInt whole = a / den;
    BigInt rem = a % den;
    std::string out = (num < 0 ? "-" : "") + whole.str();
    if (places > 0) {
        out += '.';
        for (int i = 0; i < places; ++i) {
            rem *= 10;
            out += static_cast<char>('0' + static_cast<int>(rem / den));
            rem %= den;
        }
    }
    return out;
}

double ExactRational::to_double() const { return value_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

}  // namespace dsum
