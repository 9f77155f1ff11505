#include "lerchlab/big_complex.hpp"

namespace lerchlab {

BigReal BigComplex::arg() const {
    BigReal r(prec());
    mpfr_atan2(r.raw(), im_.raw(), re_.raw(), MPFR_RNDN);
    return r;
}

BigComplex BigComplex::log() const {
    return {abs().log(), arg()};
}

BigComplex BigComplex::sin() const {
    // sin(x+iy) = sin x cosh y + i cos x sinh y
    BigReal ch(prec()), sh(prec());
    mpfr_cosh(ch.raw(), im_.raw(), MPFR_RNDN);
    mpfr_sinh(sh.raw(), im_.raw(), MPFR_RNDN);
    return {re_.sin() * ch, re_.cos() * sh};
}

BigComplex pow_positive(const BigReal& base, const BigComplex& e) {
    BigReal lb = base.log();
    return BigComplex(e.re() * lb, e.im() * lb).exp();
}

}  // namespace lerchlab
