#ifndef CCCFORGE_CCC_HPP
#define CCCFORGE_CCC_HPP

#include <cstdint>
#include <vector>

#include "cccforge/codes.hpp"
#include "cccforge/field.hpp"

namespace cccforge {

// Symbol histogram of one codeword: omega[beta] for beta in F_p.
using CompositionVector = std::vector<uint64_t>;

CompositionVector composition_of(const std::vector<uint8_t>& word, uint32_t p);

/* C^gamma_{D(alpha)} = { c(a) : a in S_gamma }, where
   S_gamma = { a in F_q^* : Tr(a^2) = gamma }.  Members are kept as source
   indices in ascending order; codewords are recomputed on demand. */
struct Subcode {
    uint32_t alpha = 0;
    uint32_t gamma = 0;
    uint64_t n = 0;
    std::vector<uint64_t> member_indices;

    uint64_t M() const { return member_indices.size(); }
};

Subcode build_subcode(const ExtField& field, uint32_t alpha, uint32_t gamma);

struct CCCParameters {
    uint64_t n = 0;
    uint64_t M = 0;
    uint64_t d = 0;
    CompositionVector omega;
    bool constant = false;
};

// Exact measurement: compositions of every member, pairwise minimum
// distance via wt(c(a1 - a2)) looked up in the supercode weight table.
CCCParameters measure_ccc(const ExtField& field, const Subcode& subcode,
                          int threads = 0);

enum class Theorem2Variant { as_printed, derived };

// Even m, alpha != 0; gamma anywhere in F_p.
CCCParameters theorem2_prediction(const Parameters& params, uint32_t alpha,
                                  uint32_t gamma, Theorem2Variant variant);

struct Theorem2Verdict {
    CCCParameters measured;
    CCCParameters printed;
    CCCParameters derived;
    bool printed_match = false;   // on (n, M, omega)
    bool derived_match = false;   // on (n, M, omega)
    bool printed_sum_consistent = false;  // sum omega == n
    bool derived_sum_consistent = false;
    bool printed_d_match = false;
    bool derived_d_match = false;
};

Theorem2Verdict verify_theorem2(const ExtField& field, uint32_t alpha, uint32_t gamma,
                                int threads = 0);

struct Corollary1Result {
    int64_t sum = 0;
    bool matches_printed = false;  // (-1)^s
    bool matches_flipped = false;  // -(-1)^s
};

// sum_{x in F_p} eta-bar(t - x^2), t != 0.
Corollary1Result corollary1_sum(uint32_t p, uint32_t t);

struct Prop1Check {
    int64_t measured_sq_sum = 0;
    int64_t rhs = 0;
    int64_t residual = 0;
    bool alpha_gamma_square = false;
};

// gamma != 0, m even.
Prop1Check proposition1_check(const Parameters& params, uint32_t alpha, uint32_t gamma,
                              const CompositionVector& measured_omega);

struct BoundReport {
    int64_t denominator = 0;
    bool applicable = false;
    // bound = num/den in lowest terms when applicable
    int64_t bound_num = 0;
    int64_t bound_den = 1;
    bool optimal = false;
};

BoundReport lfvc_bound(uint64_t n, uint64_t d, const CompositionVector& omega,
                       uint64_t M);

}  // namespace cccforge

#endif
