#include "lerchlab/numeric.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "lerchlab/errors.hpp"

namespace lerchlab {

namespace {

std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache = {Rational(1)};
    return cache;
}
std::mutex bernoulli_mutex;

// Working precision used inside a special-function evaluation so that the
// result is good to the caller-visible precision.
long guarded(long prec) { return prec + 48; }

BigReal half_log_2pi(long wp) {
    return ((BigReal::pi(wp) * 2).log()) / 2;
}

// Shift threshold for the Stirling series. The smallest term of the
// divergent series at argument x is about exp(-2 pi x), so x must exceed
// P ln2 / (2 pi) for P bits; keep a margin on top of that.
long stirling_threshold(long wp) {
    double t1 = 0.4 * static_cast<double>(wp) / std::log(static_cast<double>(wp));
    double t2 = 0.115 * static_cast<double>(wp) + 6.0;
    long n = static_cast<long>(std::ceil(t1 > t2 ? t1 : t2));
    return n < 8 ? 8 : n;
}

// sin(pi z) with the integer part of Re z reduced exactly first.
BigComplex sin_pi(const BigComplex& z, long wp) {
    BigReal fl(wp);
    mpfr_floor(fl.raw(), z.re().raw());
    long k = fl.to_long();
    BigComplex zr(z.re() - fl, z.im());
    BigComplex s = (BigComplex(BigReal::pi(wp)) * zr).sin();
    return (k % 2 == 0) ? s : -s;
}

// cos(pi z), same reduction.
BigComplex cos_pi(const BigComplex& z, long wp) {
    BigReal fl(wp);
    mpfr_floor(fl.raw(), z.re().raw());
    long k = fl.to_long();
    BigComplex pz = BigComplex(BigReal::pi(wp)) * BigComplex(z.re() - fl, z.im());
    BigReal ch(wp), sh(wp);
    mpfr_cosh(ch.raw(), pz.im().raw(), MPFR_RNDN);
    mpfr_sinh(sh.raw(), pz.im().raw(), MPFR_RNDN);
    BigComplex c(pz.re().cos() * ch, -(pz.re().sin() * sh));
    return (k % 2 == 0) ? c : -c;
}

bool is_nonpositive_integer(const BigComplex& z, long wp) {
    if (!z.im().is_zero()) return false;
    if (z.re().sign() > 0) return false;
    BigReal r(wp);
    mpfr_round(r.raw(), z.re().raw());
    return (z.re() - r).abs() < BigReal::pow2(-(wp - 8), wp);
}

}  // namespace

Rational bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& cache = bernoulli_cache();
    while (cache.size() <= k) {
        unsigned m = static_cast<unsigned>(cache.size());
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) acc += binomial(m + 1, j) * cache[j];
        cache.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return cache[k];
}

Rational bernoulli_poly(unsigned k, const Rational& x) {
    Rational acc(0);
    Rational xp(1);
    // B_k(x) = sum_j C(k,j) B_{k-j} x^j
    for (unsigned j = 0; j <= k; ++j) {
        acc += binomial(k, j) * bernoulli(k - j) * xp;
        if (j < k) xp *= x;
    }
    return acc;
}

Rational binomial(unsigned long n, unsigned long k) {
    Rational r;
    mpz_bin_uiui(mpq_numref(r.raw()), n, k);
    mpz_set_ui(mpq_denref(r.raw()), 1);
    return r;
}

BigComplex log_gamma(const BigComplex& z0) {
    long wp = guarded(z0.prec());
    BigComplex z(z0.re().round_to(wp), z0.im().round_to(wp));
    if (is_nonpositive_integer(z, wp))
        throw pole_error("log_gamma: pole at nonpositive integer");

    BigReal half = BigReal(1, wp) / 2;
    if (z.re() < half) {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        BigComplex s = sin_pi(z, wp);
        if (s.is_zero()) throw pole_error("log_gamma: pole");
        return BigComplex(BigReal::pi(wp).log()) - s.log() - log_gamma(BigComplex(1, wp) - z);
    }

    long x0 = stirling_threshold(wp);
    BigComplex shift_acc(wp);
    BigComplex w = z;
    while (w.re() < BigReal(x0, wp)) {
        shift_acc += w.log();
        w += BigComplex(1, wp);
    }

    BigComplex lw = w.log();
    BigComplex acc = (w - BigComplex(half)) * lw - w + BigComplex(half_log_2pi(wp));
    BigComplex w2inv = BigComplex(1, wp) / (w * w);
    BigComplex p = BigComplex(1, wp) / w;
    BigReal eps = BigReal::pow2(-(wp + 4), wp);
    BigReal prev_mag(wp);
    for (unsigned j = 1; j <= static_cast<unsigned>(4 * wp); ++j) {
        Rational c = bernoulli(2 * j) / Rational(static_cast<long>(2 * j) * (2 * j - 1));
        BigComplex term = p * BigReal(c, wp);
        BigReal mag = term.norm_inf();
        if (j > 1 && mag > prev_mag) break;  // past the optimal truncation point
        acc += term;
        if (mag < eps * (acc.norm_inf() + BigReal(1, wp))) break;
        prev_mag = mag;
        p *= w2inv;
    }
    return acc - shift_acc;
}

BigReal gamma_ln(const BigReal& x) {
    if (x.sign() <= 0) throw domain_error("gamma_ln: requires x > 0");
    return log_gamma(BigComplex(x)).re();
}

BigComplex digamma(const BigComplex& z0) {
    long wp = guarded(z0.prec());
    BigComplex z(z0.re().round_to(wp), z0.im().round_to(wp));
    if (is_nonpositive_integer(z, wp)) throw pole_error("digamma: pole at nonpositive integer");

    BigReal half = BigReal(1, wp) / 2;
    if (z.re() < half) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        BigComplex s = sin_pi(z, wp);
        if (s.is_zero()) throw pole_error("digamma: pole");
        BigComplex c = cos_pi(z, wp);
        return digamma(BigComplex(1, wp) - z) - BigComplex(BigReal::pi(wp)) * (c / s);
    }

    long x0 = stirling_threshold(wp);
    BigComplex shift_acc(wp);
    BigComplex w = z;
    while (w.re() < BigReal(x0, wp)) {
        shift_acc += BigComplex(1, wp) / w;
        w += BigComplex(1, wp);
    }

    BigComplex winv = BigComplex(1, wp) / w;
    BigComplex w2inv = winv * winv;
    BigComplex acc = w.log() - winv / 2;
    BigComplex p = w2inv;
    BigReal eps = BigReal::pow2(-(wp + 4), wp);
    BigReal prev_mag(wp);
    for (unsigned j = 1; j <= static_cast<unsigned>(4 * wp); ++j) {
        Rational c = bernoulli(2 * j) / Rational(static_cast<long>(2 * j));
        BigComplex term = p * BigReal(c, wp);
        BigReal mag = term.norm_inf();
        if (j > 1 && mag > prev_mag) break;
        acc -= term;
        if (mag < eps * (acc.norm_inf() + BigReal(1, wp))) break;
        prev_mag = mag;
        p *= w2inv;
    }
    return acc - shift_acc;
}

BigReal digamma(const BigReal& x) {
    if (x.sign() <= 0) throw domain_error("digamma: requires x > 0");
    return digamma(BigComplex(x)).re();
}

namespace {

struct EmResult {
    BigComplex value;
    BigComplex ds;
    bool ok;  // a-posteriori bound on the first omitted term met
};

EmResult euler_maclaurin(const BigComplex& s_in, const Rational& a, long wp, long shifts,
                         long corrections, const BigReal& tol) {
    BigComplex s(s_in.re().round_to(wp), s_in.im().round_to(wp));
    BigReal A(a, wp);
    BigComplex ms = -s;

    BigComplex sum(wp), sum_ds(wp);
    for (long k = 0; k < shifts; ++k) {
        BigReal base = BigReal(k, wp) + A;
        BigReal lg = base.log();
        BigComplex t = BigComplex(ms.re() * lg, ms.im() * lg).exp();
        sum += t;
        sum_ds -= t * lg;
    }

    BigReal x = BigReal(shifts, wp) + A;
    BigReal lx = x.log();
    // x^{1-s} and x^{-s}
    BigComplex one_ms = BigComplex(1, wp) - s;
    BigComplex x1ms = BigComplex(one_ms.re() * lx, one_ms.im() * lx).exp();
    BigComplex xms = BigComplex(ms.re() * lx, ms.im() * lx).exp();
    BigComplex sm1 = s - BigComplex(1, wp);

    BigComplex t1 = x1ms / sm1;
    sum += t1;
    sum_ds += t1 * (-lx) - x1ms / (sm1 * sm1);

    BigComplex t2 = xms / 2;
    sum += t2;
    sum_ds += t2 * (-lx);

    // Correction terms B_{2j}/(2j)! * P_j(s) * x^{-s-2j+1},
    // P_j(s) = s(s+1)...(s+2j-2), differentiated along with the product.
    BigComplex P = s;                 // P_1
    BigComplex Pd = BigComplex(1, wp);  // P_1'
    BigComplex xpow = xms / x;        // x^{-s-1}
    BigReal x2inv = BigReal(1, wp) / (x * x);
    BigComplex last_term(wp), last_term_ds(wp);
    for (long j = 1; j <= corrections + 1; ++j) {
        Rational c = bernoulli(2 * static_cast<unsigned>(j));
        // divide by (2j)!
        for (long i = 2; i <= 2 * j; ++i) c /= Rational(i);
        BigReal cf(c, wp);
        BigComplex term = (P * cf) * xpow;
        BigComplex term_ds = ((Pd - P * lx) * cf) * xpow;
        if (j <= corrections) {
            sum += term;
            sum_ds += term_ds;
            // advance P to P_{j+1}: multiply by (s+2j-1)(s+2j)
            BigComplex f1 = s + BigComplex(2 * j - 1, wp);
            BigComplex f2 = s + BigComplex(2 * j, wp);
            Pd = Pd * f1 * f2 + P * (f1 + f2);
            P = P * f1 * f2;
            xpow = xpow * x2inv;
        } else {
            last_term = term;
            last_term_ds = term_ds;
        }
    }

    BigReal scale = sum.norm_inf() + sum_ds.norm_inf() + BigReal(1, wp);
    bool ok = last_term.norm_inf() + last_term_ds.norm_inf() < tol * scale;
    return {sum, sum_ds, ok};
}

}  // namespace

HurwitzPair hurwitz_zeta_both(const BigComplex& s, const Rational& a, long prec) {
    if (a <= Rational(0) || a > Rational(1))
        throw domain_error("hurwitz_zeta: requires 0 < a <= 1");
    long wp = guarded(prec);
    {
        BigComplex d = s - BigComplex(1, wp);
        if (d.norm_inf() < BigReal::pow2(-prec / 2, wp))
            throw pole_error("hurwitz_zeta: pole at s = 1");
    }
    double smag = std::sqrt(s.re().to_double() * s.re().to_double() +
                            s.im().to_double() * s.im().to_double());
    for (int attempt = 0; attempt < 3; ++attempt) {
        long wpa = wp + 64 * attempt;
        long shifts = std::max<long>(static_cast<long>(std::ceil(0.4 * wpa)),
                                     static_cast<long>(std::ceil(2.0 * smag)));
        if (shifts < 2) shifts = 2;
        // For Re s < 0 the partial sums grow like N^{|Re s|+1}; carry the
        // cancelled bits as extra guard precision.
        double sre = s.re().to_double();
        if (sre < 0)
            wpa += static_cast<long>(std::ceil((-sre + 2.0) *
                                               std::log2(static_cast<double>(shifts) + 2.0))) +
                   16;
        long corrections = (wpa + 7) / 8;
        BigReal tol = BigReal::pow2(-(prec + 8), wpa);
        EmResult r = euler_maclaurin(s, a, wpa, shifts, corrections, tol);
        if (r.ok || attempt == 2) return {r.value, r.ds};
    }
    throw std::logic_error("unreachable");
}

HurwitzPair hurwitz_zeta_reg1(const Rational& a, long prec) {
    if (a <= Rational(0) || a > Rational(1))
        throw domain_error("hurwitz_zeta_reg1: requires 0 < a <= 1");
    long wp = guarded(prec);
    for (int attempt = 0; attempt < 3; ++attempt) {
        long wpa = wp + 64 * attempt;
        long shifts = std::max<long>(static_cast<long>(std::ceil(0.4 * wpa)), 2);
        long corrections = (wpa + 7) / 8;
        BigReal tol = BigReal::pow2(-(prec + 8), wpa);

        // Euler-Maclaurin for zeta_H(s,a) with the 1/(s-1) pole subtracted,
        // evaluated termwise at s=1 together with the s-derivative:
        //   x^{1-s}/(s-1) - 1/(s-1) -> -log x, derivative (log x)^2/2,
        //   correction m: B_{2m}/(2m) x^{-2m}, derivative factor H_{2m-1}-log x.
        BigReal A(a, wpa);
        BigReal value(wpa), ds(wpa);
        for (long k = 0; k < shifts; ++k) {
            BigReal base = BigReal(k, wpa) + A;
            BigReal inv = BigReal(1, wpa) / base;
            value += inv;
            ds -= base.log() * inv;
        }
        BigReal x = BigReal(shifts, wpa) + A;
        BigReal lx = x.log();
        value -= lx;
        ds += lx * lx / 2;
        BigReal xinv = BigReal(1, wpa) / x;
        value += xinv / 2;
        ds -= lx * xinv / 2;

        BigReal x2inv = xinv * xinv;
        BigReal xpow = x2inv;  // x^{-2m}
        Rational harmonic(1);  // H_{2m-1}
        BigReal last(wpa), last_ds(wpa);
        for (long m = 1; m <= corrections + 1; ++m) {
            Rational c = bernoulli(2 * static_cast<unsigned>(m)) / Rational(2 * m);
            BigReal term = BigReal(c, wpa) * xpow;
            BigReal term_ds = term * (BigReal(harmonic, wpa) - lx);
            if (m <= corrections) {
                value += term;
                ds += term_ds;
                xpow *= x2inv;
                harmonic += Rational(1, 2 * m) + Rational(1, 2 * m + 1);
            } else {
                last = term.abs();
                last_ds = term_ds.abs();
            }
        }
        BigReal scale = value.abs() + ds.abs() + BigReal(1, wpa);
        if (last + last_ds < tol * scale || attempt == 2)
            return {BigComplex(value), BigComplex(ds)};
    }
    throw std::logic_error("unreachable");
}

BigComplex hurwitz_zeta(const BigComplex& s, const Rational& a, long prec) {
    return hurwitz_zeta_both(s, a, prec).value;
}

BigComplex hurwitz_zeta_ds(const BigComplex& s, const Rational& a, long prec) {
    return hurwitz_zeta_both(s, a, prec).ds;
}

BigReal agm(const BigReal& a0, const BigReal& b0) {
    if (a0.sign() <= 0 || b0.sign() <= 0) throw domain_error("agm: requires a, b > 0");
    long wp = guarded(a0.prec() > b0.prec() ? a0.prec() : b0.prec());
    BigReal a = a0.round_to(wp), b = b0.round_to(wp);
    BigReal eps = BigReal::pow2(-(wp - 4), wp);
    for (int i = 0; i < 8 * 64; ++i) {
        if ((a - b).abs() <= eps * a.abs()) break;
        BigReal m = (a + b) / 2;
        BigReal g = (a * b).sqrt();
        a = m;
        b = g;
    }
    return (a + b) / 2;
}

BigReal quad_tanh_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                       const BigReal& b, long prec) {
    long wp = prec + 32;
    // Abscissas carry extra bits so that endpoint distances like 1 - x keep
    // wp significant bits inside the integrand.
    long sp = 2 * wp + 64;
    BigReal c = ((a + b) / 2).round_to(sp);
    BigReal r = ((b - a) / 2).round_to(sp);
    BigReal pi_half = BigReal::pi(sp) / 2;
    double tmax = std::log((static_cast<double>(wp) * 0.6931 + 20.0) * 4.0 / 3.14159) + 1.0;

    BigReal eps = BigReal::pow2(-wp, wp);
    BigReal total(sp);
    BigReal prev(sp);
    int max_level = 12;
    for (int level = 0; level <= max_level; ++level) {
        double h = std::pow(2.0, -level);
        long kmax = static_cast<long>(std::ceil(tmax / h));
        BigReal hh = BigReal::from_double(h, sp);
        BigReal level_sum(sp);
        for (long k = -kmax; k <= kmax; ++k) {
            if (level > 0 && k % 2 == 0) continue;  // already counted at coarser level
            BigReal t = hh * k;
            BigReal sh(sp), ch(sp);
            mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
            BigReal u = pi_half * sh;
            BigReal tu(sp);
            mpfr_tanh(tu.raw(), u.raw(), MPFR_RNDN);
            BigReal cu(sp);
            mpfr_cosh(cu.raw(), u.raw(), MPFR_RNDN);
            BigReal w = pi_half * ch / (cu * cu);
            BigReal x = c + r * tu;
            if (x <= a || x >= b) continue;  // rounding pushed x onto an endpoint
            level_sum += w * f(x);
        }
        if (level == 0)
            total = level_sum * hh;
        else
            total = total / 2 + level_sum * hh;
        BigReal ti = total * r;
        if (level >= 3 && (ti - prev).abs() <= eps * (ti.abs() + BigReal(1, sp))) {
            return ti.round_to(wp);
        }
        prev = ti;
    }
    return prev.round_to(wp);
}

}  // namespace lerchlab
