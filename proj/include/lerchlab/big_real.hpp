#pragma once

#include <mpfr.h>

#include <string>

#include "lerchlab/rational.hpp"

namespace lerchlab {

// Arbitrary-precision real with an explicit working precision in bits.
// Binary operations compute at the larger of the two operand precisions,
// so results are deterministic for fixed precisions and operand order.
class BigReal {
public:
    static constexpr long kMinPrec = 64;

    explicit BigReal(long prec = kMinPrec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    BigReal(long i, long prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_si(v_, i, MPFR_RNDN);
    }
    BigReal(const Rational& q, long prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_q(v_, q.raw(), MPFR_RNDN);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    // Same value rounded to a new precision.
    BigReal round_to(long prec) const {
        BigReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    static BigReal from_double(double d, long prec) {
        BigReal r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static BigReal from_string(const std::string& s, long prec);
    static BigReal pi(long prec) {
        BigReal r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigReal log2_const(long prec) {
        BigReal r(prec);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }
    static BigReal euler_gamma(long prec) {
        BigReal r(prec);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e as a BigReal, e may be negative.
    static BigReal pow2(long e, long prec) {
        BigReal r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigReal operator-() const {
        BigReal r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
    BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
    BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
    BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

    friend BigReal operator*(const BigReal& a, long b) {
        BigReal r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, long b) {
        BigReal r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) {
        return mpfr_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const BigReal& a, const BigReal& b) {
        return mpfr_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return b <= a; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigReal abs() const {
        BigReal r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal sqrt() const {
        BigReal r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal log() const {
        BigReal r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal exp() const {
        BigReal r(prec());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal sin() const {
        BigReal r(prec());
        mpfr_sin(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal cos() const {
        BigReal r(prec());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal atan() const {
        BigReal r(prec());
        mpfr_atan(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal pow(const BigReal& e) const {
        BigReal r(join(*this, e));
        mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
        return r;
    }
    BigReal pow_si(long e) const {
        BigReal r(prec());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Decimal rendering with the given number of significant digits.
    std::string str(long digits) const;

    // MPFR reference oracles, exposed for tests.
    BigReal mpfr_lngamma_oracle() const {
        BigReal r(prec());
        mpfr_lngamma(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal mpfr_digamma_oracle() const {
        BigReal r(prec());
        mpfr_digamma(r.v_, v_, MPFR_RNDN);
        return r;
    }

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

private:
    static long clamp(long p) { return p < kMinPrec ? kMinPrec : p; }
    static long join(const BigReal& a, const BigReal& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t v_;
};

}  // namespace lerchlab
