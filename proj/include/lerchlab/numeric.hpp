#pragma once

#include <functional>

#include "lerchlab/big_complex.hpp"
#include "lerchlab/big_real.hpp"
#include "lerchlab/rational.hpp"

namespace lerchlab {

// Exact Bernoulli number B_k, convention B_1 = -1/2. Values are memoized;
// the cache behaves as write-once and is safe for concurrent readers.
Rational bernoulli(unsigned k);

// Exact Bernoulli polynomial value B_k(x).
Rational bernoulli_poly(unsigned k, const Rational& x);

// Binomial coefficient as an exact rational.
Rational binomial(unsigned long n, unsigned long k);

// log Gamma on the complex plane (principal determination built so that
// exp(log_gamma(z)) == Gamma(z); Stirling series after argument shifting,
// reflection for Re z < 1/2). Poles at nonpositive integers.
BigComplex log_gamma(const BigComplex& z);

// log Gamma(x) for real x > 0; domain error otherwise.
BigReal gamma_ln(const BigReal& x);

// psi(z) = Gamma'(z)/Gamma(z), same strategy as log_gamma.
BigComplex digamma(const BigComplex& z);
BigReal digamma(const BigReal& x);

// Hurwitz zeta zeta_H(s, a) for 0 < a <= 1, s != 1, via Euler-Maclaurin
// with an a-posteriori tail bound (precision is raised and the evaluation
// retried when the bound is not met). prec is the target precision in bits.
BigComplex hurwitz_zeta(const BigComplex& s, const Rational& a, long prec);

// d/ds zeta_H(s, a), term-wise analytic differentiation of the same
// Euler-Maclaurin expansion (never finite differences).
BigComplex hurwitz_zeta_ds(const BigComplex& s, const Rational& a, long prec);

// Both value and s-derivative in one pass.
struct HurwitzPair {
    BigComplex value;
    BigComplex ds;
};
HurwitzPair hurwitz_zeta_both(const BigComplex& s, const Rational& a, long prec);

// Regularized expansion at the pole: value = lim_{s->1} (zeta_H(s,a) - 1/(s-1))
// (equals -psi(a)) and ds = lim_{s->1} d/ds (zeta_H(s,a) - 1/(s-1)). Both are
// real; they are returned as BigComplex for uniformity with the callers.
HurwitzPair hurwitz_zeta_reg1(const Rational& a, long prec);

// Arithmetic-geometric mean, a, b > 0.
BigReal agm(const BigReal& a, const BigReal& b);

// Tanh-sinh quadrature of f over the finite interval [a, b]. Handles
// integrable endpoint singularities. prec is the target precision in bits;
// the integrand is sampled at prec + guard bits.
BigReal quad_tanh_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                       const BigReal& b, long prec);

}  // namespace lerchlab
