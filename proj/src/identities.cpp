#include "lerchlab/identities.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "lerchlab/errors.hpp"
#include "lerchlab/hodge_eps.hpp"
#include "lerchlab/lerch.hpp"
#include "lerchlab/numeric.hpp"

namespace lerchlab {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// True when z sits within 1/32 of a nonpositive integer (a Gamma pole).
bool near_gamma_pole(const BigComplex& z) {
    const long wp = z.prec();
    BigReal eps(Rational(1, 32), wp);
    if (!(z.im().abs() < eps)) return false;
    BigReal r = z.re();
    if (r > eps) return false;
    BigReal nearest(r.to_long(), wp);
    return (r - nearest).abs() < eps;
}

void finish(IdentityReport& rep) {
    const long wp = rep.lhs.prec() > rep.rhs.prec() ? rep.lhs.prec() : rep.rhs.prec();
    rep.abs_err = (rep.lhs - rep.rhs).abs();
    BigReal scale = rep.lhs.abs() > rep.rhs.abs() ? rep.lhs.abs() : rep.rhs.abs();
    rep.rel_err = scale.is_zero() ? rep.abs_err : rep.abs_err / scale;
    rep.pass = rep.abs_err <= rep.tolerance || rep.rel_err <= rep.tolerance;
    (void)wp;
}

}  // namespace

DirichletCharacter conjugate_character(const DirichletCharacter& chi) {
    const UnitGroup& g = unit_group(chi.modulus());
    std::vector<unsigned long> e = chi.exponents();
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) e[i] = g.orders[i] - e[i];
    return DirichletCharacter(chi.modulus(), std::move(e));
}

IdentityReport verify_lemma_functional(const DirichletCharacter& chi, const BigComplex& s,
                                       long digits, bool conjugate_sum) {
    if (!chi.is_odd()) throw usage_error("verify_lemma_functional: character must be odd");
    const unsigned n = chi.modulus();
    const long prec = bits_for_digits(digits);
    const long wp = prec + 32;
    BigComplex sw(s.re().round_to(wp), s.im().round_to(wp));

    BigComplex one(1, wp), half(BigReal(Rational(1, 2), wp));
    BigComplex g_num = one - sw * half.re();          // 1 - s/2
    BigComplex g_den = (sw + one) * half.re();        // (s + 1)/2
    if (near_gamma_pole(g_num) || near_gamma_pole(g_den))
        throw domain_error("verify_lemma_functional: s too close to a Gamma pole");
    if ((one - sw).abs() < BigReal(Rational(1, 32), wp) && chi.is_principal())
        throw domain_error("verify_lemma_functional: L-pole");

    IdentityReport rep;
    rep.name = "lemma-functional";
    {
        std::ostringstream os;
        os << "n=" << n << " chi=" << chi.label() << " s=" << sw.re().str(8)
           << (sw.im().is_zero() ? "" : "+i*" + sw.im().str(8))
           << (conjugate_sum ? "" : " variant=unconjugated-sum");
        rep.params = os.str();
    }
    rep.precision_bits = prec;
    rep.tolerance = BigReal(10, wp).pow_si(-(digits - 15));

    // Lerch side
    BigComplex lhs(wp);
    for (unsigned u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        BigComplex cv = chi.value_c(static_cast<long>(u), wp);
        if (!conjugate_sum) {
            // drifted convention probe: chi instead of conj(chi)
        } else {
            cv = cv.conj();
        }
        lhs += cv * lerch_cos_sin(RootOfUnityAngle(static_cast<long>(u), n), sw, wp).second;
    }

    // Gamma / L side
    DirichletCharacter chibar = conjugate_character(chi);
    BigComplex lval = l_function(chibar, one - sw, wp).value;
    BigComplex nfac = ((one - sw) * BigReal(static_cast<long>(n), wp).log()).exp();
    BigComplex gfac = (log_gamma(g_num) - log_gamma(g_den)).exp();
    BigComplex pfac = ((sw - half) * BigReal::pi(wp).log()).exp();
    BigComplex rhs = nfac * gfac * pfac * lval;

    rep.lhs = lhs;
    rep.rhs = rhs;
    finish(rep);
    return rep;
}

IdentityReport verify_theorem2_ratio(const DirichletCharacter& chi, long digits) {
    if (!chi.is_odd()) throw usage_error("verify_theorem2_ratio: character must be odd");
    const unsigned n = chi.modulus();
    const long prec = bits_for_digits(digits);
    const long wp = prec + 32;

    IdentityReport rep;
    rep.name = "theorem2-ratio";
    rep.params = "n=" + std::to_string(n) + " chi=" + chi.label();
    rep.precision_bits = prec;
    rep.tolerance = BigReal(10, wp).pow_si(-(digits - 15));

    // Lerch side: ratio of the eta' and eta character sums at s = 0
    BigComplex zero(0, wp), num(wp), den(wp);
    for (unsigned u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        BigComplex cv = chi.value_c(static_cast<long>(u), wp);
        RootOfUnityAngle th(static_cast<long>(u), n);
        num += cv * lerch_ds(th, zero, wp).second;
        den += cv * lerch_cos_sin(th, zero, wp).second;
    }
    if (den.abs() < BigReal::pow2(-prec / 2, wp))
        throw domain_error("verify_theorem2_ratio: character eta-sum vanished");
    rep.lhs = num / den;

    // L-function side
    unsigned f = chi.conductor();
    DirichletCharacter chip = associated_primitive(chi);
    LValue l0 = l_function_ds(conjugate_character(chip), zero, wp);
    BigComplex rhs = l0.ds / l0.value +
                     BigComplex(BigReal(static_cast<long>(f), wp).log() -
                                BigReal(static_cast<long>(n), wp).log());
    for (unsigned p : prime_divisors(n)) {
        BigComplex cp = chip.value_c(static_cast<long>(p), wp);
        if (cp.is_zero()) continue;
        BigReal logp = BigReal(static_cast<long>(p), wp).log();
        rhs -= cp * logp / (BigComplex(static_cast<long>(p), wp) - cp);
    }
    rep.rhs = rhs;
    finish(rep);
    return rep;
}

IdentityReport verify_eta_zero(unsigned n, long prec) {
    if (n < 2) throw usage_error("verify_eta_zero: n must be at least 2");
    const long wp = prec + 32;

    IdentityReport rep;
    rep.name = "eta-zero";
    rep.precision_bits = prec;
    rep.tolerance = BigReal::pow2(-(prec - 16), wp);
    BigComplex zero(0, wp);

    BigReal worst(-1, wp);
    unsigned worst_l = 1;
    for (unsigned l = 1; l < n; ++l) {
        RootOfUnityAngle th(static_cast<long>(l), n);
        BigComplex eta = lerch_cos_sin(th, zero, wp).second;
        BigReal t = th.theta(wp);
        BigComplex z(t.cos(), t.sin());
        BigComplex w = z / (BigComplex(1, wp) - z);
        BigComplex im_part(w.im());
        BigReal err = (eta - im_part).abs();
        if (err > worst) {
            worst = err;
            worst_l = l;
            rep.lhs = eta;
            rep.rhs = im_part;
        }
    }
    rep.params = "n=" + std::to_string(n) + " worst_l=" + std::to_string(worst_l);
    finish(rep);
    return rep;
}

}  // namespace lerchlab
