#include "lerchlab/char_class.hpp"

#include <numeric>

#include "lerchlab/errors.hpp"
#include "lerchlab/lerch.hpp"
#include "lerchlab/numeric.hpp"

namespace lerchlab {

unsigned EquivariantBundleSpec::total_rank() const {
    unsigned r = 0;
    for (const auto& [l, rl] : lines) r += rl;
    return r;
}

std::vector<unsigned> EquivariantBundleSpec::root_exponents() const {
    std::vector<unsigned> e;
    for (const auto& [l, rl] : lines) {
        long m = l % static_cast<long>(n);
        if (m < 0) m += n;
        for (unsigned i = 0; i < rl; ++i) e.push_back(static_cast<unsigned>(m));
    }
    return e;
}

unsigned EquivariantBundleSpec::rank_zero_part() const {
    unsigned r = 0;
    for (unsigned e : root_exponents())
        if (e == 0) ++r;
    return r;
}

namespace {

// e^{gamma_i} (sign = +1) or e^{-gamma_i} (sign = -1)
GradedElement exp_root(unsigned n, unsigned nvars, unsigned D, unsigned i, int sign) {
    GradedElement g = GradedElement::variable(n, nvars, D, i);
    if (sign < 0) g = -g;
    return g.exp();
}

GradedElement one_elem(unsigned n, unsigned nvars, unsigned D) {
    return GradedElement::constant(n, nvars, D, Cyclotomic(n, Rational(1)));
}

// zeta_L(z, -l) on the rational path for z = 1.
Rational riemann_negint(unsigned l) {
    if (l == 0) return Rational(-1, 2);
    return -bernoulli(l + 1) / Rational(static_cast<long>(l) + 1);
}

}  // namespace

GradedElement ch_g_split(const EquivariantBundleSpec& spec, bool dualize, unsigned D) {
    const unsigned n = spec.n;
    auto exps = spec.root_exponents();
    const unsigned r = static_cast<unsigned>(exps.size());
    GradedElement acc(n, r, D);
    for (unsigned i = 0; i < r; ++i) {
        long e = static_cast<long>(exps[i]);
        Cyclotomic alpha = Cyclotomic::zeta_pow(n, dualize ? e : -e);
        acc += exp_root(n, r, D, i, dualize ? +1 : -1) * alpha;
    }
    return acc;
}

GradedElement lambda_minus1_ch(const EquivariantBundleSpec& spec, unsigned D) {
    const unsigned n = spec.n;
    auto exps = spec.root_exponents();
    const unsigned r = static_cast<unsigned>(exps.size());
    GradedElement acc = one_elem(n, r, D);
    for (unsigned i = 0; i < r; ++i) {
        Cyclotomic alpha = Cyclotomic::zeta_pow(n, static_cast<long>(exps[i]));
        acc *= one_elem(n, r, D) - exp_root(n, r, D, i, +1) * alpha;
    }
    return acc;
}

GradedElement weighted_lambda_sum(const EquivariantBundleSpec& spec, unsigned D) {
    const unsigned n = spec.n;
    auto exps = spec.root_exponents();
    const unsigned r = static_cast<unsigned>(exps.size());
    GradedElement acc(n, r, D);
    for (unsigned j = 0; j < r; ++j) {
        Cyclotomic aj = Cyclotomic::zeta_pow(n, static_cast<long>(exps[j]));
        GradedElement term = exp_root(n, r, D, j, +1) * aj;
        for (unsigned i = 0; i < r; ++i) {
            if (i == j) continue;
            Cyclotomic ai = Cyclotomic::zeta_pow(n, static_cast<long>(exps[i]));
            term *= one_elem(n, r, D) - exp_root(n, r, D, i, +1) * ai;
        }
        acc -= term;
    }
    return acc;
}

GradedElement kappa(const EquivariantBundleSpec& spec, unsigned D) {
    const unsigned n = spec.n;
    auto exps = spec.root_exponents();
    const unsigned r = static_cast<unsigned>(exps.size());

    // Td(E_0): per zero-eigenvalue root, sum_k B_k/k! gamma^k (B_1 = -1/2),
    // the Todd series of the undualized root -gamma.
    GradedElement td = one_elem(n, r, D);
    for (unsigned i = 0; i < r; ++i) {
        if (exps[i] != 0) continue;
        GradedElement line(n, r, D);
        GradedElement pw = one_elem(n, r, D);
        GradedElement gi = GradedElement::variable(n, r, D, i);
        Rational fact(1);
        for (unsigned k = 0; k <= D; ++k) {
            if (k > 0) {
                pw *= gi;
                fact /= Rational(static_cast<long>(k));
            }
            line += pw * Cyclotomic(n, bernoulli(k) * fact);
        }
        td *= line;
    }

    // denominator: lambda_-1 of the nonzero-eigenvalue part only
    GradedElement den = one_elem(n, r, D);
    for (unsigned i = 0; i < r; ++i) {
        if (exps[i] == 0) continue;
        Cyclotomic ai = Cyclotomic::zeta_pow(n, static_cast<long>(exps[i]));
        den *= one_elem(n, r, D) - exp_root(n, r, D, i, +1) * ai;
    }
    if (den.constant_term().is_zero())
        throw domain_error("kappa: denominator constant term vanishes");

    return td * weighted_lambda_sum(spec, D) * den.inverse();
}

GradedElement kappa_rhs(const EquivariantBundleSpec& spec, unsigned l, unsigned D) {
    const unsigned n = spec.n;
    auto exps = spec.root_exponents();
    const unsigned r = static_cast<unsigned>(exps.size());

    // c^top(E_0) = prod over zero-eigenvalue roots of (-gamma_i)
    GradedElement ctop = one_elem(n, r, D);
    for (unsigned i = 0; i < r; ++i)
        if (exps[i] == 0) ctop *= -GradedElement::variable(n, r, D, i);

    GradedElement sum(n, r, D);
    std::vector<bool> seen(n, false);
    for (unsigned i = 0; i < r; ++i) seen[exps[i]] = true;
    for (unsigned m = 0; m < n; ++m) {
        if (!seen[m]) continue;
        Cyclotomic lv = m == 0 ? Cyclotomic(n, riemann_negint(l))
                               : lerch_negint_exact(Cyclotomic::zeta_pow(n, m), l);
        // ch^{[l]} of the eigenvalue-m summand of E^dual: sum gamma_i^l / l!
        GradedElement chl(n, r, D);
        Rational fact(1);
        for (unsigned k = 2; k <= l; ++k) fact *= Rational(k);
        for (unsigned i = 0; i < r; ++i) {
            if (exps[i] != m) continue;
            GradedElement pw = one_elem(n, r, D);
            GradedElement gi = GradedElement::variable(n, r, D, i);
            for (unsigned k = 0; k < l; ++k) pw *= gi;
            chl += pw * Cyclotomic(n, Rational(1) / fact);
        }
        sum += chl * lv;
    }
    return -(ctop * sum);
}

bool verify_kappa(const EquivariantBundleSpec& spec, unsigned l) {
    const unsigned target = l + spec.rank_zero_part();
    const unsigned D = target;
    GradedElement lhs = kappa(spec, D).component(target);
    GradedElement rhs = kappa_rhs(spec, l, D).component(target);
    return lhs == rhs;
}

ToyChowElement::ToyChowElement(unsigned n_) : n(n_), z(n_) {}
ToyChowElement::ToyChowElement(unsigned n_, const Cyclotomic& z_) : n(n_), z(z_) {}

void ToyChowElement::set_x(long l, const Cyclotomic& c) {
    if (c.is_zero())
        x.erase(l);
    else
        x[l] = c;
}

ToyChowElement operator+(const ToyChowElement& a, const ToyChowElement& b) {
    ToyChowElement r(a.n, a.z + b.z);
    r.x = a.x;
    for (const auto& [l, c] : b.x) {
        auto it = r.x.find(l);
        Cyclotomic s = it == r.x.end() ? c : it->second + c;
        r.set_x(l, s);
    }
    return r;
}

ToyChowElement operator-(const ToyChowElement& a, const ToyChowElement& b) {
    ToyChowElement nb(b.n, -b.z);
    for (const auto& [l, c] : b.x) nb.x.emplace(l, -c);
    return a + nb;
}

ToyChowElement operator*(const ToyChowElement& a, const ToyChowElement& b) {
    ToyChowElement r(a.n, a.z * b.z);
    for (const auto& [l, c] : b.x) r.set_x(l, a.z * c);
    for (const auto& [l, c] : a.x) {
        auto it = r.x.find(l);
        Cyclotomic s = b.z * c;
        if (it != r.x.end()) s += it->second;
        r.set_x(l, s);
    }
    return r;
}

ToyChowElement operator*(const ToyChowElement& a, const Cyclotomic& c) {
    ToyChowElement r(a.n, a.z * c);
    for (const auto& [l, v] : a.x) r.set_x(l, v * c);
    return r;
}

bool operator==(const ToyChowElement& a, const ToyChowElement& b) {
    return a.n == b.n && a.z == b.z && a.x == b.x;
}

ToyChowElement toy_lambda_minus1(const EquivariantBundleSpec& spec) {
    const unsigned n = spec.n;
    ToyChowElement acc(n, Cyclotomic(n, Rational(1)));
    for (const auto& [l, rl] : spec.lines) {
        if (rl == 0) continue;
        long lm = l % static_cast<long>(n);
        if (lm < 0) lm += n;
        if (lm == 0) throw domain_error("toy_lambda_minus1: eigenvalue exponent 0 mod n");
        ToyChowElement block(n);
        for (unsigned k = 0; k <= rl; ++k) {
            Cyclotomic w = Cyclotomic::zeta_pow(n, lm * static_cast<long>(k)) *
                           (k % 2 == 0 ? Rational(1) : Rational(-1));
            ToyChowElement t(n, w * binomial(rl, k));
            if (k >= 1) t.set_x(lm, w * binomial(rl - 1, k - 1));
            block = block + t;
        }
        acc = acc * block;
    }
    return acc;
}

bool verify_grrr(const EquivariantBundleSpec& spec) {
    const unsigned n = spec.n;
    ToyChowElement lhs = toy_lambda_minus1(spec);
    ToyChowElement rhs(n, Cyclotomic(n, Rational(1)));
    for (const auto& [l, rl] : spec.lines) {
        if (rl == 0) continue;
        long lm = l % static_cast<long>(n);
        if (lm < 0) lm += n;
        Cyclotomic zl = Cyclotomic::zeta_pow(n, lm);
        Cyclotomic om = Cyclotomic(n, Rational(1)) - zl;
        lhs = lhs * om.inverse().pow(static_cast<long>(rl));
        // -zeta^l/(1-zeta^l) c1_l, accumulated in case a degree repeats
        auto it = rhs.x.find(lm);
        Cyclotomic add = -(zl * om.inverse());
        rhs.set_x(lm, it == rhs.x.end() ? add : it->second + add);
    }
    return lhs == rhs;
}

std::vector<Rational> projector_poly(unsigned n) {
    if (n == 0) throw domain_error("projector_poly: n must be positive");
    std::vector<Cyclotomic> acc(n, Cyclotomic(n));
    for (unsigned u = 0; u < n; ++u) {
        if (std::gcd(static_cast<unsigned long>(u == 0 ? n : u),
                     static_cast<unsigned long>(n)) != 1 &&
            n != 1)
            continue;
        Cyclotomic zu = Cyclotomic::zeta_pow(n, static_cast<long>(u));
        // synthetic division: (T^n - 1)/(T - zeta^u) = sum_k zeta^{u(n-1-k)} T^k
        std::vector<Cyclotomic> quot;
        for (unsigned k = 0; k < n; ++k)
            quot.push_back(Cyclotomic::zeta_pow(n, static_cast<long>(u) *
                                                       static_cast<long>(n - 1 - k)));
        // denominator: prod over the other n-th roots of (zeta^u - zeta^v)
        Cyclotomic den(n, Rational(1));
        for (unsigned v = 0; v < n; ++v)
            if (v != u) den *= zu - Cyclotomic::zeta_pow(n, static_cast<long>(v));
        Cyclotomic dinv = den.inverse();
        for (unsigned k = 0; k < n; ++k) acc[k] += quot[k] * dinv;
    }
    std::vector<Rational> out;
    for (unsigned k = 0; k < n; ++k) {
        if (!acc[k].is_rational())
            throw std::logic_error("projector_poly: coefficient failed to rationalize");
        out.push_back(acc[k].rational_value());
    }
    // trim leading zeros (degree <= n-1, often lower)
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

FixedPointCount fixed_point_count(const EquivariantBundleSpec& spec) {
    const unsigned n = spec.n;
    FixedPointCount out{Cyclotomic(n, Rational(1)), false};
    for (unsigned e : spec.root_exponents()) {
        if (e == 0) {
            out.degenerate = true;
            out.value = Cyclotomic(n);
            return out;
        }
        out.value *= Cyclotomic(n, Rational(1)) - Cyclotomic::zeta_pow(n, static_cast<long>(e));
    }
    return out;
}

bool projector_idempotent_check(unsigned n) {
    std::vector<Rational> p = projector_poly(n);
    // companion matrix of T^n - 1: M e_i = e_{i+1 mod n} (column i)
    auto mat_mul = [n](const std::vector<Rational>& A, const std::vector<Rational>& B) {
        std::vector<Rational> C(static_cast<size_t>(n) * n, Rational(0));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned k = 0; k < n; ++k) {
                const Rational& a = A[i * n + k];
                if (a.is_zero()) continue;
                for (unsigned j = 0; j < n; ++j) C[i * n + j] += a * B[k * n + j];
            }
        return C;
    };
    std::vector<Rational> M(static_cast<size_t>(n) * n, Rational(0));
    for (unsigned i = 0; i < n; ++i) M[((i + 1) % n) * n + i] = Rational(1);
    std::vector<Rational> I(static_cast<size_t>(n) * n, Rational(0));
    for (unsigned i = 0; i < n; ++i) I[i * n + i] = Rational(1);

    // Horner evaluation of p at M
    std::vector<Rational> P(static_cast<size_t>(n) * n, Rational(0));
    for (size_t k = p.size(); k-- > 0;) {
        P = mat_mul(P, M);
        for (unsigned i = 0; i < n; ++i) P[i * n + i] += p[k];
    }
    std::vector<Rational> P2 = mat_mul(P, P);
    if (P2 != P) return false;
    Rational tr(0);
    for (unsigned i = 0; i < n; ++i) tr += P[i * n + i];
    unsigned long phi = 0;
    for (unsigned long a = 1; a <= n; ++a)
        if (std::gcd(a, static_cast<unsigned long>(n)) == 1) ++phi;
    return tr == Rational(static_cast<long>(phi));
}

}  // namespace lerchlab
