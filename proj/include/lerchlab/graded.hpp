#pragma once

#include <map>
#include <vector>

#include "lerchlab/cyclotomic.hpp"

namespace lerchlab {

// Degree-reverse-lexicographic order on exponent vectors: lower total degree
// first; within a degree, the monomial with the larger exponent in the
// rightmost differing position comes first.
struct DegRevLex {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Element of Q(zeta_n)[gamma_1..gamma_r] truncated above total degree D.
// Coefficients are exact cyclotomic numbers; monomials with zero coefficient
// are not stored, so equality is map equality.
class GradedElement {
public:
    GradedElement(unsigned n, unsigned nvars, unsigned maxdeg);
    static GradedElement constant(unsigned n, unsigned nvars, unsigned maxdeg,
                                  const Cyclotomic& c);
    static GradedElement variable(unsigned n, unsigned nvars, unsigned maxdeg, unsigned i);

    unsigned conductor() const { return n_; }
    unsigned nvars() const { return nvars_; }
    unsigned maxdeg() const { return maxdeg_; }

    Cyclotomic coeff(const std::vector<unsigned>& mono) const;
    Cyclotomic constant_term() const;
    void set_coeff(const std::vector<unsigned>& mono, const Cyclotomic& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<unsigned>, Cyclotomic, DegRevLex>& terms() const { return terms_; }

    friend GradedElement operator+(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator-(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator*(const GradedElement& a, const Cyclotomic& c);
    GradedElement operator-() const;
    GradedElement& operator+=(const GradedElement& o) { return *this = *this + o; }
    GradedElement& operator-=(const GradedElement& o) { return *this = *this - o; }
    GradedElement& operator*=(const GradedElement& o) { return *this = *this * o; }
    friend bool operator==(const GradedElement& a, const GradedElement& b);
    friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }

    // Multiplicative inverse by Newton iteration on the truncation; requires
    // an invertible (nonzero) constant term.
    GradedElement inverse() const;
    // exp of a element with zero constant term (finite sum, nilpotency).
    GradedElement exp() const;
    // Homogeneous part of the given total degree.
    GradedElement component(unsigned deg) const;

private:
    unsigned n_, nvars_, maxdeg_;
    std::map<std::vector<unsigned>, Cyclotomic, DegRevLex> terms_;
    void check_compatible(const GradedElement& o) const;
};

}  // namespace lerchlab
