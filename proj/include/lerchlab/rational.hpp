#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lerchlab {

// Exact rational number over GMP mpq_t. Always stored in lowest terms with
// positive denominator (mpq canonical form).
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long num) {
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
    }
    Rational(long num, long den);
    explicit Rational(const std::string& s);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Rational inverse() const;
    // Largest integer <= *this, as a Rational.
    Rational floor() const;
    // *this - floor(*this), in [0,1).
    Rational frac() const { return *this - floor(); }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    std::string str() const;
    std::string num_str() const;
    std::string den_str() const;
    double to_double() const { return mpq_get_d(q_); }
    // Numerator/denominator as long; throws if they do not fit.
    long num_long() const;
    long den_long() const;

    const mpq_t& raw() const { return q_; }
    mpq_t& raw() { return q_; }

private:
    mpq_t q_;
};

}  // namespace lerchlab
