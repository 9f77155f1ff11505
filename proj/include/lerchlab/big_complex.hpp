#pragma once

#include <string>

#include "lerchlab/big_real.hpp"

namespace lerchlab {

// Complex number over two BigReals. Principal branch for log.
class BigComplex {
public:
    BigComplex() = default;
    explicit BigComplex(long prec) : re_(prec), im_(prec) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(const BigReal& re) : re_(re), im_(BigReal(0, re.prec())) {}
    BigComplex(long i, long prec) : re_(i, prec), im_(0, prec) {}

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    long prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    BigComplex conj() const { return {re_, -im_}; }
    BigComplex operator-() const { return {-re_, -im_}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend BigComplex operator*(const BigComplex& a, const BigReal& b) {
        return {a.re_ * b, a.im_ * b};
    }
    friend BigComplex operator/(const BigComplex& a, const BigReal& b) {
        return {a.re_ / b, a.im_ / b};
    }
    friend BigComplex operator*(const BigComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
    friend BigComplex operator/(const BigComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }

    BigReal abs() const { return (re_ * re_ + im_ * im_).sqrt(); }
    // Max-norm, cheap magnitude estimate for error bounds.
    BigReal norm_inf() const {
        BigReal a = re_.abs(), b = im_.abs();
        return a > b ? a : b;
    }

    BigComplex exp() const {
        BigReal e = re_.exp();
        return {e * im_.cos(), e * im_.sin()};
    }
    // Principal log: Im in (-pi, pi].
    BigComplex log() const;
    // Principal argument.
    BigReal arg() const;
    BigComplex sin() const;
    // this^e = exp(e * log(this)), principal branch.
    BigComplex pow(const BigComplex& e) const { return (e * log()).exp(); }

    std::string str(long digits) const {
        return "(" + re_.str(digits) + ", " + im_.str(digits) + ")";
    }

private:
    BigReal re_, im_;
};

// base^e for real base > 0 and complex e, via exp(e * log base).
BigComplex pow_positive(const BigReal& base, const BigComplex& e);

}  // namespace lerchlab
