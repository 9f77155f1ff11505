#pragma once

#include <map>
#include <string>
#include <vector>

#include "lerchlab/big_complex.hpp"
#include "lerchlab/cyclotomic.hpp"

namespace lerchlab {

// Structure of (Z/n)^x as a product of cyclic groups. Generators are chosen
// deterministically: odd prime-power factors contribute the smallest primitive
// root (CRT-lifted), the 2-power part contributes {-1, 5} (for 8 | n) or {3}
// (for n divisible by 4 only).
struct UnitGroup {
    unsigned n;
    std::vector<unsigned long> generators;
    std::vector<unsigned long> orders;  // orders[i] = order of generators[i]
    unsigned long exponent;             // lcm of the orders (1 for trivial group)
    std::map<unsigned long, std::vector<unsigned long>> dlog_table;

    unsigned long phi() const { return dlog_table.size(); }
    // Exponent vector of the unit u on the generators.
    const std::vector<unsigned long>& dlog(unsigned long u) const;
};

// Memoized; the returned reference is stable.
const UnitGroup& unit_group(unsigned n);

// Dirichlet character mod n, stored as its exponent vector on the unit-group
// generators. Values are exact roots of unity in Q(zeta_e), e the unit-group
// exponent; chi(a) = 0 when gcd(a, n) > 1.
class DirichletCharacter {
public:
    DirichletCharacter(unsigned n, std::vector<unsigned long> exps);

    unsigned modulus() const { return n_; }
    const std::vector<unsigned long>& exponents() const { return exps_; }
    bool is_principal() const;
    bool is_odd() const;  // chi(-1) == -1
    unsigned long order() const;
    // Exact value in Q(zeta_e).
    Cyclotomic value(long a) const;
    BigComplex value_c(long a, long prec) const;
    // Smallest f | n through which chi factors (cached).
    unsigned conductor() const;
    bool is_primitive() const { return conductor() == n_; }
    // Deterministic label, e.g. "chi4.1".
    std::string label() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.n_ == b.n_ && a.exps_ == b.exps_;
    }
    friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) {
        return !(a == b);
    }

private:
    unsigned n_;
    std::vector<unsigned long> exps_;
    mutable unsigned cond_ = 0;  // 0 = not yet computed
};

// All phi(n) characters mod n in a deterministic order.
std::vector<DirichletCharacter> characters(unsigned n);

// The primitive character mod conductor(chi) agreeing with chi on units
// coprime to the modulus of chi.
DirichletCharacter associated_primitive(const DirichletCharacter& chi);

// Lift of chi (mod f) to modulus n, f | n.
DirichletCharacter induce(const DirichletCharacter& chi, unsigned n);

// Gauss sum tau(chi) = sum_u zeta_n^u chi(u), exact in Q(zeta_lcm(n, e)).
Cyclotomic gauss_sum(const DirichletCharacter& chi);

// Twisted Gauss sum identity sum_u zeta_n^{l u} chi(u) = tau(chi) conj(chi(l)),
// checked exactly. Requires chi primitive (the identity fails in general).
bool verify_wasq(const DirichletCharacter& chi, long l);

struct LValue {
    BigComplex s;
    BigComplex value;
    BigComplex ds;  // meaningful iff has_ds
    bool has_ds = false;
};

// Non-primitive L-function L(chi, s) = n^{-s} sum_{a=1}^{n} chi(a) zeta_H(s, a/n)
// (Euler factors at p | n removed). s = 1 is allowed for non-principal chi.
LValue l_function(const DirichletCharacter& chi, const BigComplex& s, long prec);
// Same, with the s-derivative (includes the -log(n) n^{-s} product term).
LValue l_function_ds(const DirichletCharacter& chi, const BigComplex& s, long prec);

// Checks L(chi, s) = L(chi_prim, s) * prod_{p | n} (1 - chi_prim(p) p^{-s}),
// and (for non-principal chi) the logarithmic-derivative corollary at s = 1:
// L'/L(chi, 1) = L'/L(chi_prim, 1) + sum_{p|n} chi_prim(p) log p / (p - chi_prim(p)).
bool verify_euler_factor(const DirichletCharacter& chi, const BigComplex& s, long prec);

}  // namespace lerchlab
