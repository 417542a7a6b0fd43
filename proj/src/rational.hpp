#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fch {

// Exact rational with 64-bit components, always reduced, denominator > 0.
// Threshold comparisons cross-multiply in 128-bit; no floating point.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) {
            throw std::invalid_argument("Rational: zero denominator");
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return static_cast<__int128>(x.num_) * y.den_ < static_cast<__int128>(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace fch
