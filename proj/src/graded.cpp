#include "lerchlab/graded.hpp"

#include <numeric>

#include "lerchlab/errors.hpp"

namespace lerchlab {

namespace {

unsigned total_degree(const std::vector<unsigned>& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

}  // namespace

bool DegRevLex::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

GradedElement::GradedElement(unsigned n, unsigned nvars, unsigned maxdeg)
    : n_(n), nvars_(nvars), maxdeg_(maxdeg) {}

GradedElement GradedElement::constant(unsigned n, unsigned nvars, unsigned maxdeg,
                                      const Cyclotomic& c) {
    GradedElement e(n, nvars, maxdeg);
    e.set_coeff(std::vector<unsigned>(nvars, 0), c);
    return e;
}

GradedElement GradedElement::variable(unsigned n, unsigned nvars, unsigned maxdeg, unsigned i) {
    if (i >= nvars) throw domain_error("GradedElement::variable: index out of range");
    GradedElement e(n, nvars, maxdeg);
    if (maxdeg >= 1) {
        std::vector<unsigned> m(nvars, 0);
        m[i] = 1;
        e.set_coeff(m, Cyclotomic(n, Rational(1)));
    }
    return e;
}

Cyclotomic GradedElement::coeff(const std::vector<unsigned>& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Cyclotomic(n_) : it->second;
}

Cyclotomic GradedElement::constant_term() const { return coeff(std::vector<unsigned>(nvars_, 0)); }

void GradedElement::set_coeff(const std::vector<unsigned>& mono, const Cyclotomic& c) {
    if (mono.size() != nvars_) throw domain_error("GradedElement: monomial arity mismatch");
    if (total_degree(mono) > maxdeg_) return;
    if (c.is_zero())
        terms_.erase(mono);
    else
        terms_[mono] = c;
}

void GradedElement::check_compatible(const GradedElement& o) const {
    if (n_ != o.n_ || nvars_ != o.nvars_ || maxdeg_ != o.maxdeg_)
        throw domain_error("GradedElement: incompatible ring parameters");
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
    a.check_compatible(b);
    GradedElement r = a;
    for (const auto& [m, c] : b.terms_) r.set_coeff(m, r.coeff(m) + c);
    return r;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b) { return a + (-b); }

GradedElement GradedElement::operator-() const {
    GradedElement r(n_, nvars_, maxdeg_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    a.check_compatible(b);
    GradedElement r(a.n_, a.nvars_, a.maxdeg_);
    for (const auto& [ma, ca] : a.terms_) {
        unsigned da = std::accumulate(ma.begin(), ma.end(), 0u);
        for (const auto& [mb, cb] : b.terms_) {
            unsigned db = std::accumulate(mb.begin(), mb.end(), 0u);
            if (da + db > a.maxdeg_) continue;
            std::vector<unsigned> m(ma);
            for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.set_coeff(m, r.coeff(m) + ca * cb);
        }
    }
    return r;
}

GradedElement operator*(const GradedElement& a, const Cyclotomic& c) {
    GradedElement r(a.n_, a.nvars_, a.maxdeg_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : a.terms_) r.set_coeff(m, x * c);
    return r;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.n_ == b.n_ && a.nvars_ == b.nvars_ && a.maxdeg_ == b.maxdeg_ &&
           a.terms_ == b.terms_;
}

GradedElement GradedElement::inverse() const {
    Cyclotomic c0 = constant_term();
    if (c0.is_zero()) throw domain_error("GradedElement::inverse: constant term is zero");
    GradedElement two = constant(n_, nvars_, maxdeg_, Cyclotomic(n_, Rational(2)));
    GradedElement y = constant(n_, nvars_, maxdeg_, c0.inverse());
    // Newton: y <- y (2 - a y); doubles the correct order each step.
    unsigned steps = 0;
    for (unsigned reach = 1; reach <= maxdeg_; reach *= 2) ++steps;
    for (unsigned i = 0; i < steps; ++i) y = y * (two - *this * y);
    return y;
}

GradedElement GradedElement::exp() const {
    if (!constant_term().is_zero())
        throw domain_error("GradedElement::exp: requires zero constant term");
    GradedElement r = constant(n_, nvars_, maxdeg_, Cyclotomic(n_, Rational(1)));
    GradedElement pw = r;
    Rational fact(1);
    for (unsigned k = 1; k <= maxdeg_; ++k) {
        pw = pw * *this;
        if (pw.is_zero()) break;
        fact /= Rational(static_cast<long>(k));
        r += pw * Cyclotomic(n_, fact);
    }
    return r;
}

GradedElement GradedElement::component(unsigned deg) const {
    GradedElement r(n_, nvars_, maxdeg_);
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0u) == deg) r.terms_[m] = c;
    return r;
}

}  // namespace lerchlab
