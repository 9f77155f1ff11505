#pragma once

#include <vector>

#include "lerchlab/big_complex.hpp"
#include "lerchlab/rational.hpp"

namespace lerchlab {

// Dense polynomial over Q. Coefficient k is the coefficient of x^k;
// the leading coefficient is nonzero (zero polynomial has empty storage).
struct RatPoly {
    std::vector<Rational> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rational& q);
    static RatPoly monomial(unsigned deg, const Rational& q);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c == b.c; }

    // Euclidean division; b must be nonzero.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
};

// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
// the product of the lower cyclotomic polynomials. Memoized.
const RatPoly& cyclotomic_poly(unsigned n);

// Exact element of Q(zeta_n), stored as a rational polynomial in zeta_n
// reduced modulo Phi_n. Canonical reduced form, so equality is coefficient
// equality.
class Cyclotomic {
public:
    explicit Cyclotomic(unsigned n = 1);
    Cyclotomic(unsigned n, const Rational& q);
    static Cyclotomic zeta_pow(unsigned n, long k);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Degree-0 coefficient; throws unless is_rational().
    Rational rational_value() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Field inverse; throws on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    // Galois action zeta -> zeta^u; requires gcd(u, n) = 1.
    Cyclotomic galois(long u) const;
    // Complex conjugation zeta -> zeta^{-1}.
    Cyclotomic conj() const { return galois(static_cast<long>(n_) - 1); }

    // Reinterpret in Q(zeta_m) for n | m.
    Cyclotomic promote(unsigned m) const;
    // Promote both operands to Q(zeta_lcm).
    static void align(Cyclotomic& a, Cyclotomic& b);

    // Numerical embedding zeta_n -> e^{2 pi i / n} at the given precision.
    BigComplex embed(long prec) const;

private:
    unsigned n_;
    std::vector<Rational> c_;  // size deg Phi_n
    void reduce_from(const RatPoly& p);
};

}  // namespace lerchlab
