#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "lerchlab/errors.hpp"
#include "lerchlab/hodge_eps.hpp"
#include "lerchlab/identities.hpp"
#include "lerchlab/lerch.hpp"

using namespace lerchlab;

namespace {

constexpr long kDigits = 50;

BigComplex s_of(const Rational& q, long wp) { return BigComplex(BigReal(q, wp)); }

std::vector<DirichletCharacter> odd_characters(unsigned n) {
    std::vector<DirichletCharacter> out;
    for (const auto& chi : characters(n))
        if (chi.is_odd()) out.push_back(chi);
    return out;
}

}  // namespace

TEST_CASE("character conjugation") {
    for (unsigned n : {4u, 5u, 7u, 12u}) {
        for (const auto& chi : characters(n)) {
            DirichletCharacter bar = conjugate_character(chi);
            CHECK(bar.modulus() == n);
            CHECK(conjugate_character(bar) == chi);
            // values conjugate pointwise, exactly
            for (long a = 1; a < static_cast<long>(n); ++a)
                CHECK(bar.value(a) == chi.value(a).conj());
        }
    }
}

TEST_CASE("functional identity: worked points") {
    const long wp = bits_for_digits(kDigits) + 32;
    for (const auto& chi : odd_characters(4)) {
        auto r1 = verify_lemma_functional(chi, s_of(Rational(-1, 2), wp), kDigits);
        CHECK(r1.pass);
        CHECK(r1.rel_err <= BigReal(10, wp).pow_si(-35));
        auto r2 = verify_lemma_functional(chi, s_of(Rational(1, 2), wp), kDigits);
        CHECK(r2.pass);
    }
    for (const auto& chi : odd_characters(3)) {
        auto r = verify_lemma_functional(chi, s_of(Rational(-2), wp), kDigits);
        CHECK(r.pass);
        // at s = -2 the left side is a sum of eta(theta, -2) values and the
        // right involves L(conj chi, 3); both well inside the holomorphic range
        CHECK(r.precision_bits == bits_for_digits(kDigits));
        CHECK(r.tolerance == BigReal(10, r.tolerance.prec()).pow_si(-(kDigits - 15)));
    }
}

TEST_CASE("functional identity: full character/s grid") {
    const long wp = bits_for_digits(kDigits) + 32;
    const std::vector<Rational> grid{Rational(-5, 2), Rational(-5, 4), Rational(-1, 2),
                                     Rational(1, 4), Rational(3, 4)};
    BigReal bound = BigReal(10, wp).pow_si(-35);
    for (unsigned n : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 12u}) {
        for (const auto& chi : odd_characters(n)) {
            for (const auto& q : grid) {
                auto rep = verify_lemma_functional(chi, s_of(q, wp), kDigits);
                CHECK(rep.pass);
                CHECK(rep.rel_err <= bound);
            }
        }
    }
}

TEST_CASE("functional identity: conjugation convention is detectable") {
    const long wp = bits_for_digits(kDigits) + 32;
    BigComplex s = s_of(Rational(-1, 2), wp);
    // characters with non-real values: dropping the conjugation must fail
    for (const auto& chi : odd_characters(5)) {
        if (chi.order() <= 2) continue;
        auto rep = verify_lemma_functional(chi, s, kDigits, false);
        CHECK(!rep.pass);
        CHECK(rep.rel_err > BigReal(Rational(1, 100), wp));
    }
    // real-valued characters: both conventions coincide
    for (const auto& chi : odd_characters(4))
        CHECK(verify_lemma_functional(chi, s, kDigits, false).pass);
}

TEST_CASE("functional identity: input validation") {
    const long wp = bits_for_digits(30) + 32;
    for (const auto& chi : characters(5)) {
        if (chi.is_odd()) {
            // (s+1)/2 at a nonpositive integer
            CHECK_THROWS_AS(verify_lemma_functional(chi, s_of(Rational(-1), wp), 30),
                            domain_error);
            CHECK_THROWS_AS(verify_lemma_functional(chi, s_of(Rational(-3), wp), 30),
                            domain_error);
            // 1 - s/2 at a nonpositive integer
            CHECK_THROWS_AS(verify_lemma_functional(chi, s_of(Rational(2), wp), 30),
                            domain_error);
        } else {
            CHECK_THROWS_AS(verify_lemma_functional(chi, s_of(Rational(-1, 2), wp), 30),
                            usage_error);
        }
    }
}

TEST_CASE("logarithmic-derivative ratio: worked cases") {
    const long wp = bits_for_digits(kDigits) + 32;
    // n = 4: primitive, chi_prim(2) = 0, so all correction terms vanish and
    // the ratio is exactly L'(conj chi, 0)/L(conj chi, 0)
    for (const auto& chi : odd_characters(4)) {
        auto rep = verify_theorem2_ratio(chi, kDigits);
        CHECK(rep.pass);
        CHECK(rep.lhs.im().abs() < BigReal(10, wp).pow_si(-35));  // real character
    }
    // n = 12: imprimitive, log(4/12) or log(3/12) plus p in {2,3} corrections
    for (const auto& chi : odd_characters(12)) {
        CHECK(!chi.is_primitive());
        CHECK(verify_theorem2_ratio(chi, kDigits).pass);
    }
    // n = 3: primitive, chi_prim(3) = 0
    for (const auto& chi : odd_characters(3))
        CHECK(verify_theorem2_ratio(chi, kDigits).pass);
}

TEST_CASE("logarithmic-derivative ratio: all odd characters") {
    BigReal bound = BigReal(10, bits_for_digits(kDigits) + 32).pow_si(-35);
    for (unsigned n : {3u, 4u, 5u, 7u, 9u, 12u}) {
        for (const auto& chi : odd_characters(n)) {
            auto rep = verify_theorem2_ratio(chi, kDigits);
            CHECK(rep.pass);
            CHECK(rep.abs_err <= bound);
        }
    }
    for (const auto& chi : characters(5))
        if (!chi.is_odd()) CHECK_THROWS_AS(verify_theorem2_ratio(chi, kDigits), usage_error);
}

TEST_CASE("consistency triangle: d/ds of the functional identity at 0") {
    // differentiate both implemented sides of the functional identity
    // numerically at s = 0 and compare the resulting ratio with the closed
    // form of the logarithmic-derivative identity
    const long prec = bits_for_digits(kDigits);
    const long wp = prec + 32;
    BigReal h = BigReal::pow2(-prec / 4, wp);
    BigReal tol = BigReal(10, wp).pow_si(-prec / 8);

    for (unsigned n : {4u, 5u}) {
        for (const auto& chi : odd_characters(n)) {
            DirichletCharacter bar = conjugate_character(chi);
            // the identity with chi-bar has chi(u) on its sum side, matching
            // the ratio identity's sums
            auto at = [&](const BigReal& s) {
                return verify_lemma_functional(bar, BigComplex(s), kDigits);
            };
            auto plus = at(h), minus = at(-h), mid = at(BigReal(0, wp));
            BigComplex dl = (plus.lhs - minus.lhs) / (h * 2);
            BigComplex dr = (plus.rhs - minus.rhs) / (h * 2);
            BigComplex ratio_closed = verify_theorem2_ratio(chi, kDigits).rhs;
            CHECK((dl / mid.lhs - ratio_closed).abs() < tol);
            CHECK((dr / mid.rhs - ratio_closed).abs() < tol);
            CHECK((dl / mid.lhs - dr / mid.rhs).abs() < tol);
        }
    }
}

TEST_CASE("eta at s = 0 equals Im z/(1-z)") {
    const long P = 192;
    auto r2 = verify_eta_zero(2, P);
    CHECK(r2.pass);
    CHECK(r2.lhs.abs() < BigReal::pow2(-(P - 16), P));  // both sides vanish

    auto r4 = verify_eta_zero(4, P);
    CHECK(r4.pass);
    // the l = 1 value is 1/2 = Im(i/(1-i))
    BigComplex eta = lerch_cos_sin(RootOfUnityAngle(1, 4), BigComplex(0, P + 32), P + 32).second;
    CHECK((eta - BigComplex(BigReal(Rational(1, 2), P + 32))).abs() < BigReal::pow2(-P, P));

    for (unsigned n = 2; n <= 24; ++n) CHECK(verify_eta_zero(n, P).pass);
    CHECK_THROWS_AS(verify_eta_zero(1, P), usage_error);
}
