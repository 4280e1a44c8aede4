#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace toric {

class Int;

namespace detail {
struct BigInt; // GMP-backed storage, definition in int.cpp
Int wrap_big(std::shared_ptr<const BigInt> big);
Int add_slow(const Int& a, const Int& b);
Int sub_slow(const Int& a, const Int& b);
Int mul_slow(const Int& a, const Int& b);
Int div_slow(const Int& a, const Int& b);
Int mod_slow(const Int& a, const Int& b);
Int neg_slow(const Int& a);
Int abs_slow(const Int& a);
int cmp_slow(const Int& a, const Int& b);
Int gcd_slow(const Int& a, const Int& b);
int sign_slow(const Int& a);
[[noreturn]] void throw_int_overflow(const Int& a);
}

// Arbitrary-precision signed integer with an inline machine-word fast path.
// Values that fit in int64 are stored inline; arithmetic promotes to a
// shared GMP representation only on overflow and demotes when results
// fit again. Immutable value type, safe to share across threads.
class Int {
public:
    Int() = default;
    Int(long long v) : s_(v) {}
    Int(long v) : s_(v) {}
    Int(int v) : s_(v) {}
    Int(unsigned v) : s_(static_cast<long long>(v)) {}
    explicit Int(const std::string& decimal);

    bool fits_int64() const { return small(); }
    long long to_int64() const { // precondition: fits_int64()
        if (small()) return s_;
        detail::throw_int_overflow(*this);
    }
    std::string to_string() const;

    bool is_zero() const { return small() ? s_ == 0 : detail::sign_slow(*this) == 0; }
    int sign() const {
        if (small()) return s_ < 0 ? -1 : (s_ > 0 ? 1 : 0);
        return detail::sign_slow(*this);
    }
    Int abs() const {
        if (small() && s_ != INT64_MIN) return Int(s_ < 0 ? -s_ : s_);
        return detail::abs_slow(*this);
    }

    Int operator-() const {
        if (small() && s_ != INT64_MIN) return Int(-s_);
        return detail::neg_slow(*this);
    }
    Int& operator+=(const Int& o) { *this = *this + o; return *this; }
    Int& operator-=(const Int& o) { *this = *this - o; return *this; }
    Int& operator*=(const Int& o) { *this = *this * o; return *this; }

    friend Int operator+(const Int& a, const Int& b) {
        if (a.small() && b.small()) {
            long long r;
            if (!__builtin_add_overflow(a.s_, b.s_, &r)) return Int(r);
        }
        return detail::add_slow(a, b);
    }
    friend Int operator-(const Int& a, const Int& b) {
        if (a.small() && b.small()) {
            long long r;
            if (!__builtin_sub_overflow(a.s_, b.s_, &r)) return Int(r);
        }
        return detail::sub_slow(a, b);
    }
    friend Int operator*(const Int& a, const Int& b) {
        if (a.small() && b.small()) {
            long long r;
            if (!__builtin_mul_overflow(a.s_, b.s_, &r)) return Int(r);
        }
        return detail::mul_slow(a, b);
    }
    // Truncated division/remainder (C semantics). Divisor must be nonzero.
    friend Int operator/(const Int& a, const Int& b) {
        if (a.small() && b.small() && b.s_ != 0 && !(a.s_ == INT64_MIN && b.s_ == -1)) {
            return Int(a.s_ / b.s_);
        }
        return detail::div_slow(a, b);
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (a.small() && b.small() && b.s_ != 0 && !(a.s_ == INT64_MIN && b.s_ == -1)) {
            return Int(a.s_ % b.s_);
        }
        return detail::mod_slow(a, b);
    }

    friend int compare(const Int& a, const Int& b) {
        if (a.small() && b.small()) {
            return a.s_ < b.s_ ? -1 : (a.s_ > b.s_ ? 1 : 0);
        }
        return detail::cmp_slow(a, b);
    }
    friend bool operator==(const Int& a, const Int& b) {
        if (a.small() && b.small()) return a.s_ == b.s_;
        return compare(a, b) == 0;
    }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return compare(a, b) >= 0; }

    friend Int gcd(const Int& a, const Int& b); // non-negative
    friend std::ostream& operator<<(std::ostream& os, const Int& v);

    friend Int detail::wrap_big(std::shared_ptr<const detail::BigInt> big);
    friend Int detail::add_slow(const Int&, const Int&);
    friend Int detail::sub_slow(const Int&, const Int&);
    friend Int detail::mul_slow(const Int&, const Int&);
    friend Int detail::div_slow(const Int&, const Int&);
    friend Int detail::mod_slow(const Int&, const Int&);
    friend Int detail::neg_slow(const Int&);
    friend Int detail::abs_slow(const Int&);
    friend int detail::cmp_slow(const Int&, const Int&);
    friend Int detail::gcd_slow(const Int&, const Int&);
    friend int detail::sign_slow(const Int&);
    friend void detail::throw_int_overflow(const Int&);

private:
    explicit Int(std::shared_ptr<const detail::BigInt> big);
    bool small() const { return b_ == nullptr; }

    long long s_ = 0;
    std::shared_ptr<const detail::BigInt> b_;
};

inline Int gcd(const Int& a, const Int& b) {
    if (a.small() && b.small()) {
        unsigned long long x = a.s_ < 0 ? 0ULL - static_cast<unsigned long long>(a.s_)
                                        : static_cast<unsigned long long>(a.s_);
        unsigned long long y = b.s_ < 0 ? 0ULL - static_cast<unsigned long long>(b.s_)
                                        : static_cast<unsigned long long>(b.s_);
        while (y != 0) {
            unsigned long long t = x % y;
            x = y;
            y = t;
        }
        if (x <= static_cast<unsigned long long>(INT64_MAX)) {
            return Int(static_cast<long long>(x));
        }
    }
    return detail::gcd_slow(a, b);
}

} // namespace toric
