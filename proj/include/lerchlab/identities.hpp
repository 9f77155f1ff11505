#pragma once

#include <string>

#include "lerchlab/big_complex.hpp"
#include "lerchlab/dirichlet.hpp"

namespace lerchlab {

// Two-sided numeric check of one analytic identity, with both sides recorded
// verbatim for audit.
struct IdentityReport {
    std::string name;
    std::string params;
    BigComplex lhs;
    BigComplex rhs;
    BigReal abs_err;
    BigReal rel_err;
    BigReal tolerance;
    bool pass = false;
    long precision_bits = 0;
    long elapsed_ms = 0;
};

// chi with every value conjugated (the inverse character).
DirichletCharacter conjugate_character(const DirichletCharacter& chi);

// Functional identity for an odd character chi mod n:
//   sum_{u in (Z/n)^x} conj(chi(u)) eta(2 pi u / n, s)
//     = n^{1-s} Gamma(1 - s/2) / Gamma((s+1)/2) pi^{s - 1/2} L(conj chi, 1-s)
// with L the non-primitive L-function mod n. The left side goes through the
// Lerch / Hurwitz decomposition, the right through log_gamma and l_function.
// conjugate_sum = false drops the conjugation on the sum side (a deliberately
// drifted convention; it must fail for characters with non-real values).
IdentityReport verify_lemma_functional(const DirichletCharacter& chi, const BigComplex& s,
                                       long digits, bool conjugate_sum = true);

// Logarithmic-derivative ratio for an odd character chi mod n:
//   [sum_u chi(u) eta'(2 pi u/n, 0)] / [sum_u chi(u) eta(2 pi u/n, 0)]
//     = log(f/n) + L'(conj chi_prim, 0) / L(conj chi_prim, 0)
//       - sum_{p | n} chi_prim(p) log p / (p - chi_prim(p))
// where f is the conductor and chi_prim the associated primitive character.
IdentityReport verify_theorem2_ratio(const DirichletCharacter& chi, long digits);

// eta(2 pi l / n, 0) = Im(z / (1 - z)) at z = e^{2 pi i l / n}, for every
// l = 1..n-1, within 2^{-(prec-16)}. Reports the worst l.
IdentityReport verify_eta_zero(unsigned n, long prec);

}  // namespace lerchlab
