#pragma once

#include <map>
#include <vector>

#include "lerchlab/graded.hpp"
#include "lerchlab/rational.hpp"

namespace lerchlab {

// Equivariant bundle at the fixed locus: a sum of line bundles, line i carrying
// the group eigenvalue zeta_n^{l_i} (in the dualized convention used by the
// kappa identity) and its own formal Chern root gamma_i.
struct EquivariantBundleSpec {
    unsigned n;
    // (eigenvalue exponent l mod n, rank r): r separate Chern roots.
    std::vector<std::pair<long, unsigned>> lines;

    unsigned total_rank() const;
    // Flattened per-root eigenvalue exponents, reduced mod n.
    std::vector<unsigned> root_exponents() const;
    unsigned rank_zero_part() const;  // number of roots with l == 0 mod n
};

// Equivariant Chern character of the split bundle: sum_i zeta^{l_i} e^{gamma_i}
// when dualize, else sum_i zeta^{-l_i} e^{-gamma_i}. Truncated to degree D.
GradedElement ch_g_split(const EquivariantBundleSpec& spec, bool dualize, unsigned D);

// ch_g of lambda_-1 of the dual: prod_i (1 - zeta^{l_i} e^{gamma_i}).
GradedElement lambda_minus1_ch(const EquivariantBundleSpec& spec, unsigned D);

// Derivative-of-product form of sum_p (-1)^p p ch_g(Lambda^p E^dual):
// -sum_j zeta^{l_j} e^{gamma_j} prod_{i != j} (1 - zeta^{l_i} e^{gamma_i}).
// Factors with eigenvalue 1 are never inverted.
GradedElement weighted_lambda_sum(const EquivariantBundleSpec& spec, unsigned D);

// kappa = Td(E_0) * weighted_lambda_sum / lambda_minus1_ch(E_{!=0}); the
// denominator constant term prod(1 - zeta^{l_i}) over l_i != 0 is nonzero.
GradedElement kappa(const EquivariantBundleSpec& spec, unsigned D);

// Closed form of the degree-(l + rk E_0) component:
// -c^top(E_0) * sum_z zeta_L(z, -l) * ch^{[l]}(E_z^dual), with
// zeta_L(1, 0) = -1/2 and zeta_L(1, -l) = -B_{l+1}/(l+1) on the rational path.
GradedElement kappa_rhs(const EquivariantBundleSpec& spec, unsigned l, unsigned D);

// Exact equality of the degree-(l + rk E_0) components of kappa and kappa_rhs.
bool verify_kappa(const EquivariantBundleSpec& spec, unsigned l);

// Toy arithmetic Chow ring Q(zeta_n) (+) degree-1 slot: the degree-1 part is a
// formal Q(zeta_n)-combination of first-Chern symbols, keyed by the eigenvalue
// exponent l of the summand V_l. Product (z,x)(z',x') = (z z', z x' + z' x).
struct ToyChowElement {
    unsigned n;
    Cyclotomic z;
    std::map<long, Cyclotomic> x;  // symbol c1_l -> coefficient

    explicit ToyChowElement(unsigned n_);
    ToyChowElement(unsigned n_, const Cyclotomic& z_);
    void set_x(long l, const Cyclotomic& c);

    friend ToyChowElement operator+(const ToyChowElement& a, const ToyChowElement& b);
    friend ToyChowElement operator-(const ToyChowElement& a, const ToyChowElement& b);
    friend ToyChowElement operator*(const ToyChowElement& a, const ToyChowElement& b);
    friend ToyChowElement operator*(const ToyChowElement& a, const Cyclotomic& c);
    friend bool operator==(const ToyChowElement& a, const ToyChowElement& b);
    friend bool operator!=(const ToyChowElement& a, const ToyChowElement& b) {
        return !(a == b);
    }
};

// ch of lambda_-1 of the sum: per summand (l, r) the alternating binomial block
// sum_k (-1)^k zeta^{lk} (C(r,k) (+) C(r-1,k-1) c1_l), multiplied out in the
// toy ring. Requires every l != 0 mod n.
ToyChowElement toy_lambda_minus1(const EquivariantBundleSpec& spec);

// The Riemann-Roch style identity: prod_l (1 - zeta^l)^{-r_l} * toy_lambda_minus1
// equals 1 (+) (-sum_l zeta^l/(1 - zeta^l) c1_l), exactly.
bool verify_grrr(const EquivariantBundleSpec& spec);

// Lagrange interpolation of the indicator of primitive n-th roots of unity on
// mu_n; the cyclotomic irrationalities cancel and the coefficients are
// asserted rational. Coefficient k of T^k is returned at index k.
std::vector<Rational> projector_poly(unsigned n);

struct FixedPointCount {
    Cyclotomic value;
    bool degenerate;  // true when r_0 > 0 forced a zero factor
};
// prod_l (1 - zeta^l)^{r_l}.
FixedPointCount fixed_point_count(const EquivariantBundleSpec& spec);

// P_n applied to the companion matrix of T^n - 1 is idempotent with trace
// phi(n), in exact rational matrix arithmetic.
bool projector_idempotent_check(unsigned n);

}  // namespace lerchlab
