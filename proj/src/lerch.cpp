#include "lerchlab/lerch.hpp"

#include "lerchlab/errors.hpp"
#include "lerchlab/numeric.hpp"

namespace lerchlab {

RootOfUnityAngle::RootOfUnityAngle(long a_, unsigned n_) {
    if (n_ == 0) throw domain_error("RootOfUnityAngle: n must be positive");
    long m = a_ % static_cast<long>(n_);
    if (m < 0) m += n_;
    a = static_cast<unsigned>(m);
    n = n_;
}

BigReal RootOfUnityAngle::theta(long prec) const {
    return BigReal::pi(prec) * 2 * static_cast<long>(a) / static_cast<long>(n);
}

namespace {

BigComplex unit_root(unsigned a, unsigned n, long wp) {
    BigReal t = BigReal::pi(wp) * 2 * static_cast<long>(a % n) / static_cast<long>(n);
    return {t.cos(), t.sin()};
}

bool is_exactly_one(const BigComplex& s) {
    return s.im().is_zero() && s.re() == BigReal(1, s.re().prec());
}

// zeta_L(z, s) and its s-derivative through the Hurwitz decomposition. At
// s = 1 (z != 1) the simple poles of the zeta_H(s, r/n) cancel because the
// root-of-unity weights sum to zero, so the regularized parts give the value.
HurwitzPair lerch_full(const RootOfUnityAngle& z, const BigComplex& s, long prec) {
    const long wp = prec + 32;
    if (z.a == 0) return hurwitz_zeta_both(s, Rational(1), wp);

    const bool at_one = is_exactly_one(s);
    BigComplex sum(wp), sum_ds(wp);
    for (unsigned r = 1; r <= z.n; ++r) {
        BigComplex w = unit_root(z.a * r, z.n, wp);
        Rational ar(static_cast<long>(r), static_cast<long>(z.n));
        HurwitzPair h = at_one ? hurwitz_zeta_reg1(ar, wp) : hurwitz_zeta_both(s, ar, wp);
        sum += w * h.value;
        sum_ds += w * h.ds;
    }
    BigReal ln = BigReal(static_cast<long>(z.n), wp).log();
    BigComplex nms = at_one ? BigComplex(BigReal(1, wp) / static_cast<long>(z.n))
                            : BigComplex(-s.re() * ln, -s.im() * ln).exp();
    BigComplex value = nms * sum;
    return {value, nms * sum_ds - value * ln};
}

struct CosSinPair {
    HurwitzPair cos_part;  // zeta(theta, s) and derivative
    HurwitzPair sin_part;  // eta(theta, s) and derivative
};

CosSinPair cos_sin_full(const RootOfUnityAngle& theta, const BigComplex& s, long prec) {
    HurwitzPair plus = lerch_full(theta, s, prec);
    if (theta.a == 0) {
        long wp = prec + 32;
        return {plus, {BigComplex(BigReal(0, wp)), BigComplex(BigReal(0, wp))}};
    }
    HurwitzPair minus = lerch_full(theta.conjugate(), s, prec);
    auto half_sum = [](const BigComplex& x, const BigComplex& y) { return (x + y) / 2; };
    // (x - y) / (2i)
    auto half_dif = [](const BigComplex& x, const BigComplex& y) {
        BigComplex d = x - y;
        return BigComplex(d.im() / 2, -d.re() / 2);
    };
    return {{half_sum(plus.value, minus.value), half_sum(plus.ds, minus.ds)},
            {half_dif(plus.value, minus.value), half_dif(plus.ds, minus.ds)}};
}

}  // namespace

BigComplex lerch_zeta(const RootOfUnityAngle& z, const BigComplex& s, long prec) {
    return lerch_full(z, s, prec).value;
}

std::pair<BigComplex, BigComplex> lerch_cos_sin(const RootOfUnityAngle& theta,
                                                const BigComplex& s, long prec) {
    CosSinPair p = cos_sin_full(theta, s, prec);
    return {p.cos_part.value, p.sin_part.value};
}

std::pair<BigComplex, BigComplex> lerch_ds(const RootOfUnityAngle& theta, const BigComplex& s,
                                           long prec) {
    CosSinPair p = cos_sin_full(theta, s, prec);
    return {p.cos_part.ds, p.sin_part.ds};
}

RSeries r_series(const RootOfUnityAngle& theta, unsigned maxdeg, long prec) {
    const long wp = prec + 32;
    RSeries out{theta, {}};
    out.coeffs.reserve(maxdeg + 1);
    Rational factorial(1), harmonic(0);
    for (unsigned p = 0; p <= maxdeg; ++p) {
        if (p > 0) {
            factorial *= Rational(static_cast<long>(p));
            harmonic += Rational(1, static_cast<long>(p));
        }
        CosSinPair cs = cos_sin_full(theta, BigComplex(-static_cast<long>(p), wp), prec);
        BigReal h(harmonic, wp);
        BigComplex bracket = (p % 2 == 1) ? cs.cos_part.ds * 2 + cs.cos_part.value * h
                                          : cs.sin_part.ds * 2 + cs.sin_part.value * h;
        if (p % 2 == 0) bracket = BigComplex(-bracket.im(), bracket.re());  // times i
        out.coeffs.push_back(bracket / BigReal(factorial, wp));
    }
    return out;
}

Cyclotomic lerch_negint_exact(const Cyclotomic& z, unsigned l) {
    const unsigned n = z.conductor();
    Cyclotomic one(n, Rational(1));
    Cyclotomic om = one - z;
    if (om.is_zero()) throw domain_error("lerch_negint_exact: z = 1 is the rational path");

    // In u = 1/(1-z): zeta_L(z,0) = z/(1-z) = u - 1, and the operator z d/dz
    // acts on polynomials in u as p(u) -> p'(u) (u^2 - u).
    std::vector<Rational> p = {Rational(-1), Rational(1)};
    for (unsigned step = 0; step < l; ++step) {
        std::vector<Rational> d(p.size() > 1 ? p.size() - 1 : 0, Rational(0));
        for (size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Rational(static_cast<long>(k));
        std::vector<Rational> np(d.size() + 2, Rational(0));
        for (size_t k = 0; k < d.size(); ++k) {
            np[k + 2] += d[k];
            np[k + 1] -= d[k];
        }
        p = std::move(np);
    }
    Cyclotomic u = om.inverse();
    Cyclotomic acc(n);
    for (size_t i = p.size(); i-- > 0;) acc = acc * u + Cyclotomic(n, p[i]);
    return acc;
}

}  // namespace lerchlab
