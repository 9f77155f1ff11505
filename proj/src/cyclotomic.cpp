#include "lerchlab/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "lerchlab/errors.hpp"

namespace lerchlab {

RatPoly RatPoly::constant(const Rational& q) {
    RatPoly p;
    if (!q.is_zero()) p.c.push_back(q);
    return p;
}

RatPoly RatPoly::monomial(unsigned deg, const Rational& q) {
    RatPoly p;
    if (!q.is_zero()) {
        p.c.assign(deg + 1, Rational(0));
        p.c[deg] = q;
    }
    return p;
}

void RatPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly RatPoly::operator-() const {
    RatPoly r;
    r.c.reserve(c.size());
    for (const auto& x : c) r.c.push_back(-x);
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    r = a;
    q = RatPoly();
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rational(0));
    const Rational lead_inv = b.c.back().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const long shift = r.degree() - b.degree();
        Rational coef = r.c.back() * lead_inv;
        q.c[shift] = coef;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= coef * b.c[i];
        r.trim();
    }
    q.trim();
}

const RatPoly& cyclotomic_poly(unsigned n) {
    static std::map<unsigned, RatPoly> cache;
    static std::mutex mtx;
    if (n == 0) throw domain_error("cyclotomic_poly: n must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::function<const RatPoly&(unsigned)> get = [&](unsigned m) -> const RatPoly& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        RatPoly num = RatPoly::monomial(m, Rational(1)) - RatPoly::constant(Rational(1));
        RatPoly den = RatPoly::constant(Rational(1));
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) den = den * get(d);
        RatPoly q, r;
        RatPoly::divmod(num, den, q, r);
        return cache.emplace(m, std::move(q)).first->second;
    };
    return get(n);
}

Cyclotomic::Cyclotomic(unsigned n) : n_(n) {
    if (n == 0) throw domain_error("Cyclotomic: n must be positive");
    c_.assign(static_cast<size_t>(cyclotomic_poly(n).degree()), Rational(0));
}

Cyclotomic::Cyclotomic(unsigned n, const Rational& q) : Cyclotomic(n) { c_[0] = q; }

void Cyclotomic::reduce_from(const RatPoly& p) {
    const RatPoly& phi = cyclotomic_poly(n_);
    RatPoly q, r;
    RatPoly::divmod(p, phi, q, r);
    c_.assign(static_cast<size_t>(phi.degree()), Rational(0));
    for (size_t i = 0; i < r.c.size(); ++i) c_[i] = r.c[i];
}

Cyclotomic Cyclotomic::zeta_pow(unsigned n, long k) {
    Cyclotomic z(n);
    long m = k % static_cast<long>(n);
    if (m < 0) m += n;
    z.reduce_from(RatPoly::monomial(static_cast<unsigned>(m), Rational(1)));
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw domain_error("Cyclotomic: value is not rational");
    return c_[0];
}

static void check_same_field(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor())
        throw domain_error("Cyclotomic: mixed fields; promote operands first");
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    Cyclotomic r(a.n_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    Cyclotomic r(a.n_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    Cyclotomic r(a.n_);
    r.reduce_from(RatPoly(std::vector<Rational>(a.c_)) * RatPoly(std::vector<Rational>(b.c_)));
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
    Cyclotomic r(a.n_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * q;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw domain_error("Cyclotomic: inverse of zero");
    // Extended Euclid of this element against Phi_n; Phi_n is irreducible so
    // the gcd is a nonzero constant.
    RatPoly r0 = cyclotomic_poly(n_);
    RatPoly r1{std::vector<Rational>(c_)};
    RatPoly s0, s1 = RatPoly::constant(Rational(1));  // Bezout coefficient of r1
    while (!r1.is_zero() && r1.degree() > 0) {
        RatPoly q, r;
        RatPoly::divmod(r0, r1, q, r);
        RatPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) throw domain_error("Cyclotomic: inverse failed (zero divisor?)");
    Cyclotomic out(n_);
    out.reduce_from(s1 * RatPoly::constant(r1.c[0].inverse()));
    return out;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc(n_, Rational(1));
    Cyclotomic base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::galois(long u) const {
    long um = u % static_cast<long>(n_);
    if (um < 0) um += n_;
    if (std::gcd(static_cast<unsigned long>(um), static_cast<unsigned long>(n_)) != 1)
        throw domain_error("Cyclotomic: Galois action needs gcd(u, n) = 1");
    RatPoly p;
    p.c.assign(n_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) p.c[(k * um) % n_] += c_[k];
    p.trim();
    Cyclotomic r(n_);
    r.reduce_from(p);
    return r;
}

Cyclotomic Cyclotomic::promote(unsigned m) const {
    if (m % n_ != 0) throw domain_error("Cyclotomic: promote target must be a multiple of n");
    if (m == n_) return *this;
    const unsigned step = m / n_;  // zeta_n = zeta_m^step
    RatPoly p;
    p.c.assign(static_cast<size_t>(c_.size() - 1) * step + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) p.c[k * step] = c_[k];
    p.trim();
    Cyclotomic r(m);
    r.reduce_from(p);
    return r;
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    unsigned m = std::lcm(a.n_, b.n_);
    a = a.promote(m);
    b = b.promote(m);
}

BigComplex Cyclotomic::embed(long prec) const {
    const long wp = prec + 32;
    BigReal theta = BigReal::pi(wp) * 2 / static_cast<long>(n_);
    BigComplex zeta(theta.cos(), theta.sin());
    BigComplex acc(BigReal(0, wp), BigReal(0, wp));
    for (size_t i = c_.size(); i-- > 0;) acc = acc * zeta + BigComplex(BigReal(c_[i], wp));
    return {acc.re().round_to(prec), acc.im().round_to(prec)};
}

}  // namespace lerchlab
