#pragma once

#include <string>

#include "toric/errors.hpp"
#include "toric/int.hpp"

namespace toric {

// Exact rational number, kept reduced with positive denominator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_integer() const { return den_ == Int(1); }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rat operator-() const { return Rat(-num_, den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw internal_error("DivisionByZero", "rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend int compare(const Rat& a, const Rat& b) {
        return compare(a.num_ * b.den_, b.num_ * a.den_); // denominators positive
    }
    friend bool operator==(const Rat& a, const Rat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return compare(a, b) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return compare(a, b) >= 0; }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    void reduce() {
        if (den_.is_zero()) throw internal_error("DivisionByZero", "rational with zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g > Int(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    Int num_;
    Int den_;
};

} // namespace toric
