#pragma once

#include <cstdint>
#include <string>

#include "hibi/errors.hpp"

namespace hibi {

// The series oracle counts things exactly. At the default caps the largest
// intermediate stays far below 2^127, so signed 128-bit integers with checked
// operations are enough; any overflow is a hard failure, never a wrap.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit add overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit sub overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit mul overflow");
    return r;
}

inline std::int64_t to_int64(int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

std::string to_string(int128 v);

// Exact rational, always in lowest terms with positive denominator.
// Used for degree detection in polynomial interpolation, where floating
// point thresholds would be a correctness bug.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int128 num, int128 den);
    explicit Rational(int128 num) : num_(num), den_(1) {}

    int128 num() const { return num_; }
    int128 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

  private:
    int128 num_;
    int128 den_;
};

}  // namespace hibi
