#pragma once

#include <map>
#include <vector>

#include "lerchlab/big_real.hpp"
#include "lerchlab/dirichlet.hpp"
#include "lerchlab/rational.hpp"

namespace lerchlab {

// Working precision in bits for a decimal-digit request.
long bits_for_digits(long digits);

// x - floor(x), in [0, 1).
Rational frac_part(const Rational& x);

// The linear system p(u) = sum_{a in Z/f} eps(a) frac(u a / f) over all units
// u mod f, solved exactly over Q.
struct EpsilonSystem {
    unsigned f;
    std::map<unsigned long, Rational> p_values;  // u -> p(u)
    bool feasible;
    // Canonical particular solution, indexed by a = 0..f-1. Gaussian
    // elimination with column order a = 1, ..., f-1, 0; free variables zeroed.
    std::vector<Rational> epsilon;
    // Basis of {gamma : sum_a gamma(a) frac(ua/f) = 0 for all units u}.
    std::vector<std::vector<Rational>> kernel;
    // When infeasible: row vector y over the unit equations (in increasing
    // order of u) with y^T A = 0 and y^T p != 0.
    std::vector<Rational> certificate;
};

EpsilonSystem solve_epsilon(unsigned f, const std::map<unsigned long, Rational>& p_values);

// prod_{a=1}^{f-1} Gamma(1 - a/f)^{eps(a u^{-1} mod f)}; the a = 0 factor is
// Gamma(1) = 1. eps is indexed by a = 0..f-1; u must be a unit mod f.
BigReal gamma_product(unsigned f, const std::vector<Rational>& eps, unsigned long u,
                      long digits);

// For each kernel basis element gamma of the modulus-f system and each unit u,
// the product prod_a Gamma(1 - a/f)^{gamma(a u^{-1} mod f)}.
struct KernelGammaProduct {
    std::vector<Rational> gamma;
    std::vector<std::pair<unsigned long, BigReal>> products;  // (u, value)
};
std::vector<KernelGammaProduct> kernel_gamma_products(unsigned f, long digits);

// The lemniscate constant pi / agm(1, sqrt 2): real period of y^2 = x^3 - x.
BigReal lemniscate_period(long digits);

struct PeriodCheck {
    unsigned f;
    unsigned long u;
    std::vector<Rational> epsilon;  // the solution used for the product
    BigReal gamma_value;            // Gamma product
    BigReal period;                 // period oracle (quadrature / AGM)
    BigReal ratio;                  // gamma_value / (expected algebraic * period)
    bool pass;
};

// Desk-scale Chowla-Selberg instance for the CM elliptic curve of level f:
// f = 4 checks Gamma(1/4)Gamma(1/2)/Gamma(3/4) = 2 pi / agm(1, sqrt 2); f = 3
// checks the Gamma(1/3)-product against the quadrature period of y^2 = x^3+1,
// with the algebraic ratio pinned as a fixture.
PeriodCheck verify_period_conjecture_cm(unsigned f, long digits);

// Logarithmic Gamma / L-function link at an odd prime p, chi odd mod p:
// sum_a chi(a) log Gamma(1 - a/p)
//   = (L'(chi,0)/L(chi,0) + log p) * sum_a chi(a) frac(a/p).
bool verify_hurwitz_link(unsigned p, const DirichletCharacter& chi, long digits);

}  // namespace lerchlab
