#ifndef CCCFORGE_CODES_HPP
#define CCCFORGE_CODES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "cccforge/field.hpp"

namespace cccforge {

/* D(alpha) = { d in F_q^* : Tr(d^2) = alpha }, ascending element index.
   Its elements index the code's coordinates. */
struct DefiningSet {
    uint32_t alpha = 0;
    std::vector<uint64_t> element_indices;

    uint64_t size() const { return element_indices.size(); }
};

DefiningSet defining_set(const ExtField& field, uint32_t alpha);

// Lemma-4 count N_alpha = #{x in F_q : Tr(x^2) = alpha} (includes x = 0).
int64_t fiber_count_closed_form(const Parameters& params, uint32_t alpha);
uint64_t fiber_count_bruteforce(const ExtField& field, uint32_t alpha);

// N(a) = #{x : Tr(x^2) = alpha, Tr(ax) = 0}.  Closed form needs a != 0 and
// alpha != 0 and depends on a only through Tr(a^2).
int64_t n_a_closed_form(const Parameters& params, uint32_t tr_a2, uint32_t alpha);
uint64_t n_a_bruteforce(const ExtField& field, const FieldElement& a, uint32_t alpha);

// c(a) = (Tr(a d_1), ..., Tr(a d_n)).
std::vector<uint8_t> codeword(const ExtField& field, const DefiningSet& D,
                              const FieldElement& a);

struct WeightDistribution {
    uint64_t n = 0;
    uint32_t k = 0;  // log_p(distinct codewords)
    uint64_t d = 0;  // minimum nonzero weight (0 if none)
    std::map<uint64_t, uint64_t> weights;  // weight -> number of sources a

    uint64_t distinct_codewords(uint32_t p) const;
};

// OpenMP-parallel enumeration over all a in F_q.  threads = 0 uses the
// OpenMP default; the result is independent of the thread count.
WeightDistribution weight_distribution(const ExtField& field, uint32_t alpha,
                                       int threads = 0);
// Serial reference path: one naive codeword per source.
WeightDistribution weight_distribution_reference(const ExtField& field, uint32_t alpha);

// wt(c(a)) per source index, for the subcode distance trick.
std::vector<uint32_t> weight_by_source(const ExtField& field, const DefiningSet& D,
                                       int threads = 0);

// Symbol compositions (length-p histograms) for selected sources.
std::vector<std::vector<uint64_t>> compositions_for_sources(
    const ExtField& field, const DefiningSet& D, const std::vector<uint64_t>& sources,
    int threads = 0);

struct Theorem1Prediction {
    uint64_t n = 0;
    uint32_t k = 0;
    std::map<uint64_t, uint64_t> weights;  // includes the zero word
    bool degenerate = false;  // a predicted nonzero weight collapsed to 0
};

// Tables 1 (odd m) and 2 (even m); alpha != 0.
Theorem1Prediction theorem1_prediction(const Parameters& params, uint32_t alpha);

struct Theorem1Verdict {
    Theorem1Prediction predicted;
    WeightDistribution measured;
    bool length_match = false;
    bool dimension_match = false;
    bool histogram_match = false;
    bool degenerate = false;

    bool all_match() const { return length_match && dimension_match && histogram_match; }
};

Theorem1Verdict verify_theorem1(const ExtField& field, uint32_t alpha, int threads = 0);

// Row i is c(x^i) for the power basis.
std::vector<std::vector<uint8_t>> generator_matrix(const ExtField& field, uint32_t alpha);
uint32_t matrix_rank_mod_p(std::vector<std::vector<uint8_t>> rows, uint32_t p);

}  // namespace cccforge

#endif
