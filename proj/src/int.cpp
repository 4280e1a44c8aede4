#include "toric/int.hpp"

#include <gmp.h>

#include <cstdlib>
#include <ostream>

#include "toric/errors.hpp"

namespace toric {

namespace detail {

struct BigInt {
    mpz_t z;
    BigInt() { mpz_init(z); }
    explicit BigInt(long long v) { mpz_init_set_si(z, v); }
    BigInt(const BigInt&) = delete;
    BigInt& operator=(const BigInt&) = delete;
    ~BigInt() { mpz_clear(z); }
};

Int wrap_big(std::shared_ptr<const BigInt> big) { return Int(std::move(big)); }

} // namespace detail

using detail::BigInt;

namespace {

// RAII scratch register for viewing a small Int as an mpz.
struct MpzScratch {
    mpz_t z;
    MpzScratch() { mpz_init(z); }
    ~MpzScratch() { mpz_clear(z); }
};

Int make_big_result(std::shared_ptr<BigInt> big) {
    if (mpz_fits_slong_p(big->z)) {
        return Int(static_cast<long long>(mpz_get_si(big->z)));
    }
    return detail::wrap_big(std::shared_ptr<const BigInt>(std::move(big)));
}

} // namespace

// Views `value` (an Int, from inside a friend) as an mpz_srcptr named `name`.
#define TORIC_INT_VIEW(name, value)                                       \
    MpzScratch name##_scratch;                                            \
    mpz_srcptr name;                                                      \
    if ((value).b_ != nullptr) {                                          \
        name = (value).b_->z;                                             \
    } else {                                                              \
        mpz_set_si(name##_scratch.z, (value).s_);                         \
        name = name##_scratch.z;                                          \
    }

Int::Int(std::shared_ptr<const detail::BigInt> big) : s_(0), b_(std::move(big)) {}

Int::Int(const std::string& decimal) {
    auto big = std::make_shared<BigInt>();
    if (decimal.empty() || mpz_set_str(big->z, decimal.c_str(), 10) != 0) {
        throw precondition_error("BadInteger", "cannot parse '" + decimal + "' as a decimal integer");
    }
    *this = make_big_result(std::move(big));
}

std::string Int::to_string() const {
    if (small()) return std::to_string(s_);
    char* raw = mpz_get_str(nullptr, 10, b_->z);
    std::string out(raw);
    std::free(raw);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

namespace detail {

void throw_int_overflow(const Int& a) {
    throw internal_error("IntOverflow", "value does not fit in 64 bits: " + a.to_string());
}

int sign_slow(const Int& a) { return mpz_sgn(a.b_->z); }

Int neg_slow(const Int& a) {
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        mpz_neg(big->z, x);
    }
    return make_big_result(std::move(big));
}

Int abs_slow(const Int& a) {
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        mpz_abs(big->z, x);
    }
    return make_big_result(std::move(big));
}

Int add_slow(const Int& a, const Int& b) {
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        TORIC_INT_VIEW(y, b);
        mpz_add(big->z, x, y);
    }
    return make_big_result(std::move(big));
}

Int sub_slow(const Int& a, const Int& b) {
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        TORIC_INT_VIEW(y, b);
        mpz_sub(big->z, x, y);
    }
    return make_big_result(std::move(big));
}

Int mul_slow(const Int& a, const Int& b) {
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        TORIC_INT_VIEW(y, b);
        mpz_mul(big->z, x, y);
    }
    return make_big_result(std::move(big));
}

Int div_slow(const Int& a, const Int& b) {
    if (b.is_zero()) throw internal_error("DivisionByZero", "integer division by zero");
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        TORIC_INT_VIEW(y, b);
        mpz_tdiv_q(big->z, x, y);
    }
    return make_big_result(std::move(big));
}

Int mod_slow(const Int& a, const Int& b) {
    if (b.is_zero()) throw internal_error("DivisionByZero", "integer remainder by zero");
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        TORIC_INT_VIEW(y, b);
        mpz_tdiv_r(big->z, x, y);
    }
    return make_big_result(std::move(big));
}

int cmp_slow(const Int& a, const Int& b) {
    TORIC_INT_VIEW(x, a);
    TORIC_INT_VIEW(y, b);
    int c = mpz_cmp(x, y);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Int gcd_slow(const Int& a, const Int& b) {
    auto big = std::make_shared<BigInt>();
    {
        TORIC_INT_VIEW(x, a);
        TORIC_INT_VIEW(y, b);
        mpz_gcd(big->z, x, y);
    }
    return make_big_result(std::move(big));
}

} // namespace detail

#undef TORIC_INT_VIEW

} // namespace toric
