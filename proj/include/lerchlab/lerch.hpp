#pragma once

#include <utility>
#include <vector>

#include "lerchlab/big_complex.hpp"
#include "lerchlab/cyclotomic.hpp"

namespace lerchlab {

// The angle theta = 2*pi*a/n of the root of unity z = e^{2*pi*i*a/n}.
// Exact rational multiple of 2*pi, so there is no argument-reduction error.
struct RootOfUnityAngle {
    unsigned a;
    unsigned n;

    RootOfUnityAngle(long a_, unsigned n_);
    bool is_one() const { return a == 0; }
    // Angle of the conjugate root z^{-1}.
    RootOfUnityAngle conjugate() const { return {a == 0 ? 0 : static_cast<long>(n - a), n}; }
    // theta as a BigReal.
    BigReal theta(long prec) const;
};

// Lerch zeta value zeta_L(z, s) = sum_k z^k / k^s (analytic continuation),
// computed through the Hurwitz decomposition
//   zeta_L(e^{2 pi i a/n}, s) = n^{-s} sum_{r=1}^{n} e^{2 pi i a r/n} zeta_H(s, r/n).
// s = 1 is allowed for z != 1 (the Hurwitz poles cancel); for z = 1 it is a pole.
BigComplex lerch_zeta(const RootOfUnityAngle& z, const BigComplex& s, long prec);

// (zeta(theta, s), eta(theta, s)): analytic continuations of the cosine and
// sine partial zeta series sum cos(k theta)/k^s, sum sin(k theta)/k^s,
// computed as half-sum / half-difference of zeta_L at conjugate roots.
std::pair<BigComplex, BigComplex> lerch_cos_sin(const RootOfUnityAngle& theta,
                                                const BigComplex& s, long prec);

// s-derivatives (zeta'(theta, s), eta'(theta, s)), analytic termwise
// differentiation through the same decomposition (includes the -log(n) n^{-s}
// product term).
std::pair<BigComplex, BigComplex> lerch_ds(const RootOfUnityAngle& theta, const BigComplex& s,
                                           long prec);

// Coefficients of the power series R(theta, t): coefficient p is
//   (2 zeta'(theta,-p) + H_p zeta(theta,-p)) / p!        for p odd,
//   i (2 eta'(theta,-p) + H_p eta(theta,-p)) / p!        for p even,
// with H_p the p-th harmonic number (H_0 = 0).
struct RSeries {
    RootOfUnityAngle theta;
    std::vector<BigComplex> coeffs;
};
RSeries r_series(const RootOfUnityAngle& theta, unsigned maxdeg, long prec);

// Exact value of zeta_L(z, -l) for a root of unity z != 1: the operator
// (z d/dz)^l applied to z/(1-z), evaluated in the cyclotomic field.
// For z = 1 the value is the rational -B_{l+1}/(l+1); use that path instead.
Cyclotomic lerch_negint_exact(const Cyclotomic& z, unsigned l);

}  // namespace lerchlab
