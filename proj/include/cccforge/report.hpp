#ifndef CCCFORGE_REPORT_HPP
#define CCCFORGE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cccforge/ccc.hpp"
#include "cccforge/characters.hpp"
#include "cccforge/codes.hpp"
#include "cccforge/cyclotomic.hpp"

namespace cccforge {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

/* Parameter grid for the verify command.  alphas/gammas accept "all",
   "square", "nonsquare", or an explicit residue list; expansion drops
   alpha = 0 for theorem checks. */
struct GridSpec {
    std::vector<uint32_t> primes;
    std::vector<uint32_t> exponents;
    std::string alphas = "all";
    std::string gammas = "all";
};

GridSpec default_grid();
// "p=3,5;m=2,3;alpha=all;gamma=square"
GridSpec parse_grid(const std::string& text);

// Expands an alpha/gamma selector over F_p; nonzero_only drops 0.
std::vector<uint32_t> expand_selector(const std::string& selector, uint32_t p,
                                      bool nonzero_only);

json weight_distribution_to_json(const WeightDistribution& wd);
json ccc_to_json(const CCCParameters& ccc);
json bound_to_json(const BoundReport& bound);
json gauss_closed_form_to_json(const GaussClosedForm& g);
json cyclotomic_to_json(const CyclotomicInt& z);

struct VerifyOutcome {
    json report;
    int exit_code = 0;  // 0 all match, 2 mismatch/degenerate
};

// Runs every applicable claim check over the grid.  Deterministic: entry
// order and content depend only on the grid.
VerifyOutcome run_verify(const GridSpec& grid, int threads = 0);

}  // namespace cccforge

#endif
