#include "hibi/checked_arith.hpp"

namespace hibi {

std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s += static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    return {s.rbegin(), s.rend()};
}

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(int128 num, int128 den) {
    if (den == 0) throw ArithmeticOverflow("rational with zero denominator");
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    unsigned __int128 a = num < 0 ? -static_cast<unsigned __int128>(num) : num;
    unsigned __int128 g = gcd128(a, static_cast<unsigned __int128>(den));
    if (g > 1) {
        num /= static_cast<int128>(g);
        den /= static_cast<int128>(g);
    }
    num_ = num;
    den_ = den;
}

Rational Rational::operator+(const Rational& o) const {
    return {checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
            checked_mul(den_, o.den_)};
}

Rational Rational::operator-(const Rational& o) const {
    return {checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
            checked_mul(den_, o.den_)};
}

Rational Rational::operator*(const Rational& o) const {
    return {checked_mul(num_, o.num_), checked_mul(den_, o.den_)};
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw ArithmeticOverflow("rational division by zero");
    return {checked_mul(num_, o.den_), checked_mul(den_, o.num_)};
}

}  // namespace hibi
