#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "cccforge/characters.hpp"
#include "cccforge/codes.hpp"

using namespace cccforge;

TEST_CASE("defining set examples") {
    ExtField f9(3, 2);
    DefiningSet d = defining_set(f9, 1);
    CHECK(d.size() == 2);
    for (uint64_t idx : d.element_indices) {
        FieldElement x = f9.element(idx);
        CHECK(f9.trace(f9.mul(x, x)) == 1);
    }
    // ascending order
    CHECK(std::is_sorted(d.element_indices.begin(), d.element_indices.end()));

    ExtField f125(5, 3);
    CHECK(defining_set(f125, 1).size() == 30);

    // alpha = 0 in odd m: p^{m-1} - 1 (zero excluded)
    ExtField f27(3, 3);
    CHECK(defining_set(f27, 0).size() == 8);
}

TEST_CASE("fiber counts match the four-branch closed form") {
    for (auto [p, m] : {std::pair{3u, 2u}, {3u, 3u}, {3u, 4u}, {3u, 5u},
                        {3u, 6u}, {5u, 2u}, {5u, 3u}, {5u, 4u}, {7u, 2u}, {7u, 3u}}) {
        ExtField f(p, m);
        for (uint32_t alpha = 0; alpha < p; ++alpha) {
            INFO("p=", p, " m=", m, " alpha=", alpha);
            CHECK(fiber_count_closed_form(f.params(), alpha) ==
                  int64_t(fiber_count_bruteforce(f, alpha)));
        }
    }
    // spot values
    CHECK(fiber_count_closed_form(Parameters::make(3, 2), 1) == 2);
    CHECK(fiber_count_closed_form(Parameters::make(3, 4), 0) == 21);
    CHECK(fiber_count_closed_form(Parameters::make(3, 3), 0) == 9);
}

TEST_CASE("N(a) closed form vs brute force") {
    for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
        ExtField f(p, m);
        for (uint32_t alpha = 1; alpha < p; ++alpha)
            for (uint64_t i = 1; i < f.q(); ++i) {
                FieldElement a = f.element(i);
                uint32_t tr_a2 = f.trace_fast(f.mul(a, a).index());
                INFO("p=", p, " m=", m, " alpha=", alpha, " a=", i);
                CHECK(n_a_closed_form(f.params(), tr_a2, alpha) ==
                      int64_t(n_a_bruteforce(f, a, alpha)));
            }
    }
}

TEST_CASE("codeword construction") {
    ExtField f(3, 2);
    DefiningSet d = defining_set(f, 1);
    CHECK(codeword(f, d, f.zero()) == std::vector<uint8_t>(d.size(), 0));
    FieldElement first = f.element(d.element_indices[0]);
    CHECK(codeword(f, d, first) == std::vector<uint8_t>{1, 2});
    // scaling and linearity
    std::mt19937_64 rng(3);
    ExtField f81(3, 4);
    DefiningSet d81 = defining_set(f81, 2);
    std::uniform_int_distribution<uint64_t> dist(0, f81.q() - 1);
    for (int iter = 0; iter < 30; ++iter) {
        FieldElement a = f81.element(dist(rng));
        FieldElement b = f81.element(dist(rng));
        auto ca = codeword(f81, d81, a);
        auto cb = codeword(f81, d81, b);
        auto cab = codeword(f81, d81, f81.add(a, b));
        for (size_t j = 0; j < ca.size(); ++j)
            CHECK(cab[j] == (ca[j] + cb[j]) % 3);
        auto c2a = codeword(f81, d81, f81.add(a, a));
        for (size_t j = 0; j < ca.size(); ++j)
            CHECK(c2a[j] == (2 * ca[j]) % 3);
    }
}

TEST_CASE("wt(c(a)) = n_alpha - N(a)") {
    for (auto [p, m, alpha] : {std::tuple{3u, 4u, 1u}, {5u, 2u, 2u}, {3u, 3u, 2u}}) {
        ExtField f(p, m);
        DefiningSet d = defining_set(f, alpha);
        for (uint64_t i = 0; i < f.q(); ++i) {
            FieldElement a = f.element(i);
            auto w = codeword(f, d, a);
            uint64_t wt = 0;
            for (uint8_t sym : w) wt += (sym != 0);
            CHECK(wt == d.size() - n_a_bruteforce(f, a, alpha));
        }
    }
}

TEST_CASE("weight distribution: kernel vs reference, golden small codes") {
    // [30,3,20] at p=5, m=3, alpha=1
    ExtField f125(5, 3);
    WeightDistribution wd = weight_distribution(f125, 1);
    CHECK(wd.n == 30);
    CHECK(wd.k == 3);
    CHECK(wd.d == 20);
    CHECK(wd.weights == std::map<uint64_t, uint64_t>{{0, 1}, {20, 24}, {24, 40}, {26, 60}});
    WeightDistribution ref = weight_distribution_reference(f125, 1);
    CHECK(wd.weights == ref.weights);
    CHECK(wd.k == ref.k);

    // [30,4,18] at p=3, m=4
    ExtField f81(3, 4);
    WeightDistribution wd81 = weight_distribution(f81, 1);
    CHECK(wd81.n == 30);
    CHECK(wd81.k == 4);
    CHECK(wd81.d == 18);
    CHECK(wd81.weights == weight_distribution_reference(f81, 1).weights);

    // frequency sum is always p^m
    uint64_t total = 0;
    for (const auto& [w, fq] : wd81.weights) total += fq;
    CHECK(total == f81.q());
}

TEST_CASE("parallel enumeration is independent of thread count") {
    ExtField f(3, 5);
    WeightDistribution one = weight_distribution(f, 1, 1);
    WeightDistribution four = weight_distribution(f, 1, 4);
    CHECK(one.weights == four.weights);
    CHECK(one.k == four.k);
    CHECK(one.d == four.d);

    DefiningSet d = defining_set(f, 2);
    CHECK(weight_by_source(f, d, 1) == weight_by_source(f, d, 3));
}

TEST_CASE("weight histogram is invariant under the modulus choice") {
    // first two irreducible quartics over F_3
    std::vector<Poly> moduli;
    for (uint64_t idx = 0; idx < 81 && moduli.size() < 2; ++idx) {
        Poly f(5, 0);
        uint64_t t = idx;
        for (uint32_t i = 0; i < 4; ++i) {
            f[i] = uint32_t(t % 3);
            t /= 3;
        }
        f[4] = 1;
        if (is_irreducible(f, 3)) moduli.push_back(f);
    }
    REQUIRE(moduli.size() == 2);
    REQUIRE(moduli[0] != moduli[1]);
    ExtField fa(3, 4, moduli[0]);
    ExtField fb(3, 4, moduli[1]);
    for (uint32_t alpha = 0; alpha < 3; ++alpha) {
        WeightDistribution a = weight_distribution(fa, alpha);
        WeightDistribution b = weight_distribution(fb, alpha);
        CHECK(a.weights == b.weights);
        CHECK(a.k == b.k);
    }
}

TEST_CASE("table predictions") {
    // p=5, m=3, alpha=1 (Table 1, eps=+1, eta(-1)=+1)
    Theorem1Prediction t1 = theorem1_prediction(Parameters::make(5, 3), 1);
    CHECK(t1.n == 30);
    CHECK(t1.weights ==
          std::map<uint64_t, uint64_t>{{0, 1}, {20, 24}, {24, 40}, {26, 60}});
    CHECK(!t1.degenerate);

    // p=3, m=6 (Table 2, tau=-1)
    Theorem1Prediction t2 = theorem1_prediction(Parameters::make(3, 6), 1);
    CHECK(t2.n == 234);
    CHECK(t2.weights == std::map<uint64_t, uint64_t>{{0, 1}, {144, 234}, {162, 494}});

    // frequency-sum identity across a small grid
    for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 2u}, {7u, 4u}, {11u, 3u}})
        for (uint32_t alpha = 1; alpha < p; ++alpha) {
            Theorem1Prediction t = theorem1_prediction(Parameters::make(p, m), alpha);
            uint64_t total = 0;
            for (const auto& [w, fq] : t.weights) total += fq;
            uint64_t q = 1;
            for (uint32_t i = 0; i < m; ++i) q *= p;
            CHECK(total == q);
        }

    // degenerate collapse at p=3, m=2
    Theorem1Prediction deg = theorem1_prediction(Parameters::make(3, 2), 1);
    CHECK(deg.degenerate);
    CHECK_THROWS(theorem1_prediction(Parameters::make(3, 2), 0));
}

TEST_CASE("verify_theorem1 verdicts") {
    ExtField f125(5, 3);
    Theorem1Verdict ok = verify_theorem1(f125, 1);
    CHECK(ok.all_match());
    CHECK(!ok.degenerate);

    ExtField f9(3, 2);
    Theorem1Verdict deg = verify_theorem1(f9, 1);
    CHECK(deg.degenerate);
    CHECK(deg.measured.k == 1);  // dimension collapse
    CHECK(!deg.dimension_match);
}

TEST_CASE("generator matrix") {
    ExtField f125(5, 3);
    auto g = generator_matrix(f125, 1);
    REQUIRE(g.size() == 3);
    CHECK(g[0].size() == 30);
    CHECK(matrix_rank_mod_p(g, 5) == 3);
    // every row is the codeword of a basis element
    DefiningSet d = defining_set(f125, 1);
    for (uint32_t i = 0; i < 3; ++i) {
        std::vector<uint32_t> c(3, 0);
        c[i] = 1;
        CHECK(g[i] == codeword(f125, d, f125.from_coeffs(c)));
    }

    ExtField f9(3, 2);
    CHECK(matrix_rank_mod_p(generator_matrix(f9, 1), 3) == 1);
}
