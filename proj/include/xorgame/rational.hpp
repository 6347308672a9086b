#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xorgame {

/// Exact rational on 128-bit integers, for the enumeration identities that
/// must hold exactly. Always stored normalized (gcd 1, positive denominator).
class Rational {
  public:
    Rational() = default;
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(__int128 num, __int128 den) : num_(num), den_(den) { normalize(); }

    static Rational pow2(int e) {
        if (e < 0 || e > 126) throw std::overflow_error("Rational::pow2 range");
        return Rational(static_cast<__int128>(1) << e, 1);
    }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        std::string s = int128_str(num_);
        if (den_ != 1) s += "/" + int128_str(den_);
        return s;
    }

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static std::string int128_str(__int128 v) {
        if (v == 0) return "0";
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        std::string s;
        while (u) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const __int128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    __int128 num_ = 0;
    __int128 den_ = 1;
};

}  // namespace xorgame
