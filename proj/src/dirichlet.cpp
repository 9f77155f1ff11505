#include "lerchlab/dirichlet.hpp"

#include <cassert>
#include <memory>
#include <mutex>
#include <numeric>

#include "lerchlab/errors.hpp"
#include "lerchlab/numeric.hpp"

namespace lerchlab {

namespace {

unsigned long mod_pow(unsigned long b, unsigned long e, unsigned long m) {
    unsigned long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

unsigned long element_order(unsigned long g, unsigned long m) {
    unsigned long o = 1, x = g % m;
    while (x != 1 % m) {
        x = x * g % m;
        ++o;
    }
    return o;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> f;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

unsigned long totient(unsigned long n) {
    unsigned long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

// CRT lift: x == g mod q, x == 1 mod n/q (q a prime-power factor of n).
unsigned long crt_lift(unsigned long g, unsigned long q, unsigned long n) {
    unsigned long m = n / q;
    for (unsigned long x = 1; x <= n; ++x)
        if (x % q == g % q && (m == 1 || x % m == 1)) return x;
    throw std::logic_error("crt_lift: no solution");
}

UnitGroup build_unit_group(unsigned n) {
    UnitGroup G;
    G.n = n;
    for (auto [p, e] : factorize(n)) {
        unsigned long q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 2) {
                G.generators.push_back(crt_lift(3, q, n));
                G.orders.push_back(2);
            } else if (e >= 3) {
                G.generators.push_back(crt_lift(q - 1, q, n));
                G.orders.push_back(2);
                G.generators.push_back(crt_lift(5, q, n));
                G.orders.push_back(q / 4);
            }
            // q = 2: trivial factor
        } else {
            // smallest primitive root mod p^e
            unsigned long phi_q = q / p * (p - 1);
            unsigned long g = 2;
            while (element_order(g % q, q) != phi_q) ++g;
            G.generators.push_back(crt_lift(g, q, n));
            G.orders.push_back(phi_q);
        }
    }
    G.exponent = 1;
    for (unsigned long o : G.orders) G.exponent = std::lcm(G.exponent, o);

    // enumerate all products of generator powers (mixed-radix counter)
    std::vector<unsigned long> idx(G.orders.size(), 0);
    while (true) {
        unsigned long u = 1 % n;
        for (size_t i = 0; i < idx.size(); ++i) u = u * mod_pow(G.generators[i], idx[i], n) % n;
        G.dlog_table.emplace(u, idx);
        size_t i = idx.size();
        while (i > 0 && ++idx[i - 1] == G.orders[i - 1]) idx[--i] = 0;
        if (i == 0 && (idx.empty() || idx[0] == 0)) break;
    }
    assert(G.dlog_table.size() == (n == 1 ? 1 : totient(n)));
    return G;
}

}  // namespace

const std::vector<unsigned long>& UnitGroup::dlog(unsigned long u) const {
    auto it = dlog_table.find(u % n);
    if (it == dlog_table.end()) throw domain_error("UnitGroup::dlog: not a unit");
    return it->second;
}

const UnitGroup& unit_group(unsigned n) {
    static std::map<unsigned, std::unique_ptr<UnitGroup>> cache;
    static std::mutex mtx;
    if (n == 0) throw domain_error("unit_group: n must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<UnitGroup>(build_unit_group(n))).first;
    return *it->second;
}

DirichletCharacter::DirichletCharacter(unsigned n, std::vector<unsigned long> exps)
    : n_(n), exps_(std::move(exps)) {
    const UnitGroup& G = unit_group(n);
    if (exps_.size() != G.orders.size())
        throw domain_error("DirichletCharacter: exponent vector length mismatch");
    for (size_t i = 0; i < exps_.size(); ++i) exps_[i] %= G.orders[i];
}

bool DirichletCharacter::is_principal() const {
    for (unsigned long e : exps_)
        if (e != 0) return false;
    return true;
}

unsigned long DirichletCharacter::order() const {
    const UnitGroup& G = unit_group(n_);
    unsigned long o = 1;
    for (size_t i = 0; i < exps_.size(); ++i)
        o = std::lcm(o, G.orders[i] / std::gcd(G.orders[i], exps_[i]));
    return o;
}

Cyclotomic DirichletCharacter::value(long a) const {
    const UnitGroup& G = unit_group(n_);
    const unsigned e = static_cast<unsigned>(G.exponent);
    long am = a % static_cast<long>(n_);
    if (am < 0) am += n_;
    unsigned long u = static_cast<unsigned long>(am);
    if (n_ > 1 && std::gcd(u, static_cast<unsigned long>(n_)) != 1) return Cyclotomic(e);
    const auto& dl = G.dlog(u);
    unsigned long k = 0;
    for (size_t i = 0; i < dl.size(); ++i)
        k = (k + (G.exponent / G.orders[i]) * exps_[i] % G.exponent * dl[i]) % G.exponent;
    return Cyclotomic::zeta_pow(e, static_cast<long>(k));
}

BigComplex DirichletCharacter::value_c(long a, long prec) const { return value(a).embed(prec); }

bool DirichletCharacter::is_odd() const {
    const unsigned e = static_cast<unsigned>(unit_group(n_).exponent);
    return value(-1) == Cyclotomic(e, Rational(-1));
}

unsigned DirichletCharacter::conductor() const {
    if (cond_ != 0) return cond_;
    const unsigned e = static_cast<unsigned>(unit_group(n_).exponent);
    Cyclotomic one(e, Rational(1));
    for (unsigned f = 1; f <= n_; ++f) {
        if (n_ % f != 0) continue;
        bool ok = true;
        for (unsigned a = 1; a <= n_ && ok; ++a) {
            if (std::gcd(a, n_) != 1 || a % f != 1 % f) continue;
            if (value(static_cast<long>(a)) != one) ok = false;
        }
        if (ok) {
            cond_ = f;
            return cond_;
        }
    }
    throw std::logic_error("conductor: unreachable");
}

std::string DirichletCharacter::label() const {
    std::string s = "chi" + std::to_string(n_);
    for (unsigned long e : exps_) s += "." + std::to_string(e);
    return s;
}

std::vector<DirichletCharacter> characters(unsigned n) {
    const UnitGroup& G = unit_group(n);
    std::vector<DirichletCharacter> out;
    std::vector<unsigned long> idx(G.orders.size(), 0);
    while (true) {
        out.emplace_back(n, idx);
        size_t i = idx.size();
        while (i > 0 && ++idx[i - 1] == G.orders[i - 1]) idx[--i] = 0;
        if (i == 0 && (idx.empty() || idx[0] == 0)) break;
    }
    return out;
}

namespace {

// Find the exponent vector of a character mod m whose value on each unit-group
// generator matches the given targets (exact root-of-unity comparison).
DirichletCharacter character_from_values(unsigned m, const std::vector<Cyclotomic>& targets) {
    const UnitGroup& G = unit_group(m);
    const unsigned e = static_cast<unsigned>(G.exponent);
    std::vector<unsigned long> exps(G.orders.size(), 0);
    for (size_t i = 0; i < G.orders.size(); ++i) {
        bool found = false;
        for (unsigned long t = 0; t < G.orders[i] && !found; ++t) {
            Cyclotomic cand =
                Cyclotomic::zeta_pow(e, static_cast<long>((G.exponent / G.orders[i]) * t % G.exponent));
            Cyclotomic tgt = targets[i];
            Cyclotomic::align(cand, tgt);
            if (cand == tgt) {
                exps[i] = t;
                found = true;
            }
        }
        if (!found) throw std::logic_error("character_from_values: no matching exponent");
    }
    return DirichletCharacter(m, std::move(exps));
}

}  // namespace

DirichletCharacter associated_primitive(const DirichletCharacter& chi) {
    const unsigned n = chi.modulus();
    const unsigned f = chi.conductor();
    const UnitGroup& Gf = unit_group(f);
    std::vector<Cyclotomic> targets;
    for (unsigned long g : Gf.generators) {
        // lift g to a unit mod n congruent to g mod f
        unsigned long a = g;
        while (std::gcd(a, static_cast<unsigned long>(n)) != 1) a += f;
        targets.push_back(chi.value(static_cast<long>(a)));
    }
    return character_from_values(f, targets);
}

DirichletCharacter induce(const DirichletCharacter& chi, unsigned n) {
    const unsigned f = chi.modulus();
    if (n % f != 0) throw usage_error("induce: modulus must be a multiple of the conductor level");
    const UnitGroup& Gn = unit_group(n);
    std::vector<Cyclotomic> targets;
    for (unsigned long g : Gn.generators) targets.push_back(chi.value(static_cast<long>(g % f)));
    return character_from_values(n, targets);
}

Cyclotomic gauss_sum(const DirichletCharacter& chi) {
    const unsigned n = chi.modulus();
    const unsigned e = static_cast<unsigned>(unit_group(n).exponent);
    const unsigned m = std::lcm(n, e);
    Cyclotomic tau(m);
    for (unsigned long u = 1; u <= n; ++u) {
        if (std::gcd(u, static_cast<unsigned long>(n)) != 1) continue;
        tau += Cyclotomic::zeta_pow(m, static_cast<long>(u * (m / n))) *
               chi.value(static_cast<long>(u)).promote(m);
    }
    return tau;
}

bool verify_wasq(const DirichletCharacter& chi, long l) {
    if (!chi.is_primitive()) throw usage_error("verify_wasq: requires a primitive character");
    const unsigned n = chi.modulus();
    const unsigned e = static_cast<unsigned>(unit_group(n).exponent);
    const unsigned m = std::lcm(n, e);
    long lm = l % static_cast<long>(n);
    if (lm < 0) lm += n;
    Cyclotomic lhs(m);
    for (unsigned long u = 1; u <= n; ++u) {
        if (std::gcd(u, static_cast<unsigned long>(n)) != 1) continue;
        lhs += Cyclotomic::zeta_pow(m, static_cast<long>(u) * lm * static_cast<long>(m / n)) *
               chi.value(static_cast<long>(u)).promote(m);
    }
    Cyclotomic rhs = gauss_sum(chi) * chi.value(lm).conj().promote(m);
    return lhs == rhs;
}

namespace {

bool is_exactly_one(const BigComplex& s) {
    return s.im().is_zero() && s.re() == BigReal(1, s.re().prec());
}

}  // namespace

LValue l_function_ds(const DirichletCharacter& chi, const BigComplex& s, long prec) {
    const unsigned n = chi.modulus();
    const long wp = prec + 32;
    const bool at_one = is_exactly_one(s);
    const bool principal = chi.is_principal();
    if (principal) {
        BigComplex d = s - BigComplex(1, wp);
        if (d.norm_inf() < BigReal::pow2(-prec / 2, wp))
            throw pole_error("l_function: pole of the principal L at s = 1");
    }
    // At s = 1 (non-principal chi) the Hurwitz poles cancel since the
    // character sum vanishes; the regularized parts carry value and derivative.
    BigComplex sum(wp), sum_ds(wp);
    for (unsigned a = 1; a <= n; ++a) {
        Cyclotomic cv = chi.value(static_cast<long>(a));
        if (cv.is_zero()) continue;
        BigComplex w = cv.embed(wp);
        Rational an(static_cast<long>(a), static_cast<long>(n));
        HurwitzPair h = at_one ? hurwitz_zeta_reg1(an, wp) : hurwitz_zeta_both(s, an, wp);
        sum += w * h.value;
        sum_ds += w * h.ds;
    }
    BigReal ln = BigReal(static_cast<long>(n), wp).log();
    BigComplex nms = at_one ? BigComplex(BigReal(1, wp) / static_cast<long>(n))
                            : BigComplex(-s.re() * ln, -s.im() * ln).exp();
    LValue out;
    out.s = s;
    out.value = nms * sum;
    out.ds = nms * sum_ds - out.value * ln;
    out.has_ds = true;
    return out;
}

LValue l_function(const DirichletCharacter& chi, const BigComplex& s, long prec) {
    LValue v = l_function_ds(chi, s, prec);
    v.has_ds = false;
    return v;
}

bool verify_euler_factor(const DirichletCharacter& chi, const BigComplex& s, long prec) {
    const unsigned n = chi.modulus();
    const long wp = prec + 32;
    DirichletCharacter prim = associated_primitive(chi);
    BigReal tol = BigReal::pow2(-(prec - 24), wp);

    LValue full = l_function(chi, s, prec);
    LValue red = l_function(prim, s, prec);
    BigComplex prod(1, wp);
    for (auto [p, e] : factorize(n)) {
        (void)e;
        BigComplex cp = prim.value_c(static_cast<long>(p), wp);
        BigComplex pms = pow_positive(BigReal(static_cast<long>(p), wp), -s);
        prod *= BigComplex(1, wp) - cp * pms;
    }
    BigReal scale = full.value.norm_inf() + (red.value * prod).norm_inf() + BigReal(1, wp);
    if ((full.value - red.value * prod).norm_inf() > tol * scale) return false;

    if (!chi.is_principal()) {
        BigComplex one1(1, wp);
        LValue fl = l_function_ds(chi, one1, prec);
        LValue rl = l_function_ds(prim, one1, prec);
        BigComplex lhs = fl.ds / fl.value;
        BigComplex rhs = rl.ds / rl.value;
        for (auto [p, e] : factorize(n)) {
            (void)e;
            BigComplex cp = prim.value_c(static_cast<long>(p), wp);
            if (cp.is_zero()) continue;
            BigReal lp = BigReal(static_cast<long>(p), wp).log();
            rhs += cp * lp / (BigComplex(BigReal(static_cast<long>(p), wp)) - cp);
        }
        BigReal sc2 = lhs.norm_inf() + rhs.norm_inf() + BigReal(1, wp);
        if ((lhs - rhs).norm_inf() > tol * sc2) return false;
    }
    return true;
}

}  // namespace lerchlab
