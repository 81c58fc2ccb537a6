#include <doctest.h>

#include <stdexcept>

#include <random>

#include "cccforge/characters.hpp"

using namespace cccforge;

TEST_CASE("prime-field quadratic character") {
    CHECK(eta_prime(0, 7) == 0);
    CHECK(eta_prime(3, 7) == -1);  // squares mod 7 are {1,2,4}
    CHECK(eta_prime(4, 5) == 1);
    CHECK(eta_prime(-1, 3) == -1);  // -1 = 2 is a nonsquare mod 3
    // multiplicativity
    for (uint32_t p : {5u, 11u, 13u})
        for (uint32_t a = 1; a < p; ++a)
            for (uint32_t b = 1; b < p; ++b)
                CHECK(eta_prime(a, p) * eta_prime(b, p) == eta_prime(a * b, p));
}

TEST_CASE("extension-field quadratic character") {
    ExtField f(3, 2);
    CHECK(eta_ext(f, f.zero()) == 0);
    CHECK(eta_ext(f, f.one()) == 1);
    // count of squares among F_q^* is (q-1)/2
    int squares = 0;
    for (uint64_t i = 1; i < f.q(); ++i)
        squares += (eta_ext(f, f.element(i)) == 1);
    CHECK(squares == int((f.q() - 1) / 2));
}

TEST_CASE("character restriction to the prime field") {
    for (uint32_t p : {3u, 5u, 7u}) {
        ExtField odd(p, 3);
        ExtField even(p, 2);
        for (uint32_t a = 1; a < p; ++a) {
            CHECK(eta_ext(odd, odd.from_residue(a)) == eta_prime(a, p));
            CHECK(eta_ext(even, even.from_residue(a)) == 1);
        }
    }
}

TEST_CASE("prime Gauss sums, derived values") {
    // p=3: zeta - zeta^2
    CyclotomicInt g3 = gauss_sum_prime_enumerated(3);
    CHECK(g3 == CyclotomicInt::zeta_pow(3, 1) - CyclotomicInt::zeta_pow(3, 2));
    // p=5: zeta - zeta^2 - zeta^3 + zeta^4
    CyclotomicInt g5 = gauss_sum_prime_enumerated(5);
    CyclotomicInt want(5);
    want.add_zeta_pow(1, 1);
    want.add_zeta_pow(2, -1);
    want.add_zeta_pow(3, -1);
    want.add_zeta_pow(4, 1);
    CHECK(g5 == want);
}

TEST_CASE("Gauss sum magnitude |G|^2 = q") {
    for (auto [p, m] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
        ExtField f(p, m);
        CyclotomicInt g = gauss_sum_enumerated(f);
        CyclotomicInt mag = g * g.conjugate();
        REQUIRE(mag.is_integer());
        CHECK(mag.integer_value() == int64_t(f.q()));
    }
}

TEST_CASE("Gauss sum closed forms") {
    // p=3, m=2: G = +3 exactly
    ExtField f9(3, 2);
    CyclotomicInt g = gauss_sum_enumerated(f9);
    REQUIRE(g.is_integer());
    CHECK(g.integer_value() == 3);
    GaussClosedForm cf = gauss_sum_closed_form(3, 2);
    CHECK(cf.sign * (cf.unit_power % 4 == 0 ? 1 : -1) == 1);
    CHECK(cf.half_log() == 1.0);

    // p=3, m=1: i sqrt(3)
    GaussClosedForm cf31 = gauss_sum_closed_form(3, 1);
    CHECK(cf31.unit_power == 1);
    auto v = gauss_sum_prime_enumerated(3).embed();
    auto w = cf31.embed(3);
    CHECK(std::abs(v - w) < 1e-9);

    // p=5, m=1: +sqrt(5)
    auto v5 = gauss_sum_prime_enumerated(5).embed();
    CHECK(v5.real() == doctest::Approx(std::sqrt(5.0)));
    CHECK(std::abs(v5.imag()) < 1e-12);

    // p=5, m=4: -25 exactly
    ExtField f625(5, 4);
    CyclotomicInt g625 = gauss_sum_enumerated(f625);
    REQUIRE(g625.is_integer());
    CHECK(g625.integer_value() == -25);
    GaussClosedForm cf54 = gauss_sum_closed_form(5, 4);
    CHECK(cf54.sign * (cf54.unit_power % 4 == 0 ? 1 : -1) *
              int64_t(std::llround(std::pow(5.0, 2))) ==
          -25);
}

TEST_CASE("Weil quadratic sum examples") {
    ExtField f(3, 2);
    // f(x) = x^2: sum = eta(1) G = +3
    CyclotomicInt s = weil_quadratic_sum(f, f.one(), f.zero(), f.zero());
    REQUIRE(s.is_integer());
    CHECK(s.integer_value() == 3);
    // constant shift multiplies by zeta^{Tr(c)}
    FieldElement c = f.from_residue(1);
    CyclotomicInt shifted = weil_quadratic_sum(f, f.one(), f.zero(), c);
    CHECK(shifted == s * CyclotomicInt::zeta_pow(3, f.trace(c)));
    CHECK_THROWS(weil_quadratic_sum(f, f.zero(), f.one(), f.zero()));
}

TEST_CASE("Weil quadratic closed form, exhaustive q=25") {
    ExtField f(5, 2);
    for (uint64_t i2 = 1; i2 < f.q(); ++i2)
        for (uint64_t i1 = 0; i1 < f.q(); i1 += 3)
            for (uint64_t i0 = 0; i0 < f.q(); i0 += 7) {
                FieldElement a2 = f.element(i2);
                FieldElement a1 = f.element(i1);
                FieldElement a0 = f.element(i0);
                CHECK(weil_quadratic_sum(f, a2, a1, a0) ==
                      weil_quadratic_closed_form(f, a2, a1, a0));
            }
}

TEST_CASE("key double exponential sum, hand-checkable point") {
    ExtField f(3, 2);
    // some a with Tr(a^2) = 1
    FieldElement a = f.zero();
    for (uint64_t i = 1; i < f.q(); ++i) {
        FieldElement cand = f.element(i);
        if (f.trace(f.mul(cand, cand)) == 1) {
            a = cand;
            break;
        }
    }
    REQUIRE(!a.is_zero());
    CyclotomicInt s = lemma5_sum_enumerated(f, a, 1);
    REQUIRE(s.is_integer());
    CHECK(s.integer_value() == -6);
    CHECK(lemma5_closed_form(f.params(), 1, 1) == -6);
}

TEST_CASE("key double exponential sum, closed-form branches") {
    // m even, Tr(a^2)=0: tau (p-1) p^{m/2}
    CHECK(lemma5_closed_form(Parameters::make(3, 2), 0, 1) == -6);
    // m odd, Tr(a^2) != 0, cancellation branch
    Parameters p53 = Parameters::make(5, 3);
    for (uint32_t tr = 1; tr < 5; ++tr)
        for (uint32_t alpha = 1; alpha < 5; ++alpha)
            if (eta_prime(-int64_t(tr), 5) == -eta_prime(-int64_t(alpha), 5))
                CHECK(lemma5_closed_form(p53, tr, alpha) == 0);
    CHECK_THROWS(lemma5_closed_form(p53, 1, 0));
}

TEST_CASE("key double exponential sum equals closed form") {
    // exhaustive at q in {9, 27}; q=81 is covered by the acceptance suite
    for (auto [p, m] : {std::pair{3u, 2u}, {3u, 3u}}) {
        ExtField f(p, m);
        for (uint64_t i = 1; i < f.q(); ++i) {
            FieldElement a = f.element(i);
            uint32_t tr_a2 = f.trace_fast(f.mul(a, a).index());
            for (uint32_t alpha = 1; alpha < p; ++alpha) {
                CyclotomicInt s = lemma5_sum_enumerated(f, a, alpha);
                REQUIRE(s.is_integer());
                CHECK(s.integer_value() == lemma5_closed_form(f.params(), tr_a2, alpha));
            }
        }
    }
    // degenerate input a = 0 stays enumerable, no closed-form claim
    ExtField f(3, 2);
    CyclotomicInt z = lemma5_sum_enumerated(f, f.zero(), 1);
    (void)z;
}
