#include "lerchlab/rational.hpp"

#include <stdexcept>

namespace lerchlab {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    Rational d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rational::Rational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::floor() const {
    Rational r;
    mpz_t f;
    mpz_init(f);
    mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
    mpq_set_z(r.q_, f);
    mpz_clear(f);
    return r;
}

std::string Rational::str() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

std::string Rational::num_str() const {
    char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

std::string Rational::den_str() const {
    char* c = mpz_get_str(nullptr, 10, mpq_denref(q_));
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

long Rational::num_long() const {
    if (!mpz_fits_slong_p(mpq_numref(q_)))
        throw std::overflow_error("Rational: numerator does not fit in long");
    return mpz_get_si(mpq_numref(q_));
}

long Rational::den_long() const {
    if (!mpz_fits_slong_p(mpq_denref(q_)))
        throw std::overflow_error("Rational: denominator does not fit in long");
    return mpz_get_si(mpq_denref(q_));
}

}  // namespace lerchlab
