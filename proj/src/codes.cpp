#include "cccforge/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "cccforge/characters.hpp"
#include "sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cccforge {

namespace {

constexpr uint64_t kChunk = 8192;  // fixed partition, independent of threads

int64_t ipow64(uint64_t base, uint32_t e) {
    int64_t r = 1;
    while (e--) r *= int64_t(base);
    return r;
}

uint32_t log_p(uint64_t v, uint32_t p) {
    uint32_t k = 0;
    while (v > 1) {
        if (v % p) throw std::logic_error("codeword count is not a power of p");
        v /= p;
        ++k;
    }
    return k;
}

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

}  // namespace

DefiningSet defining_set(const ExtField& field, uint32_t alpha) {
    alpha %= field.p();
    DefiningSet out;
    out.alpha = alpha;
    for (uint64_t i = 1; i < field.q(); ++i) {
        FieldElement x = field.element(i);
        if (field.trace_fast(field.mul(x, x).index()) == alpha)
            out.element_indices.push_back(i);
    }
    return out;
}

int64_t fiber_count_closed_form(const Parameters& params, uint32_t alpha) {
    const uint32_t p = params.p;
    const uint32_t m = params.m;
    alpha %= p;
    if (m % 2 == 1) {
        if (alpha == 0) return ipow64(p, m - 1);
        return ipow64(p, m - 1) +
               eta_prime(-int64_t(alpha), p) * *params.epsilon * ipow64(p, (m - 1) / 2);
    }
    const int64_t tau = *params.tau;
    if (alpha == 0)
        return ipow64(p, m - 1) - tau * int64_t(p - 1) * ipow64(p, (m - 2) / 2);
    return ipow64(p, m - 1) + tau * ipow64(p, (m - 2) / 2);
}

uint64_t fiber_count_bruteforce(const ExtField& field, uint32_t alpha) {
    alpha %= field.p();
    uint64_t count = 0;
    for (uint64_t i = 0; i < field.q(); ++i) {
        FieldElement x = field.element(i);
        count += (field.trace_fast(field.mul(x, x).index()) == alpha);
    }
    return count;
}

int64_t n_a_closed_form(const Parameters& params, uint32_t tr_a2, uint32_t alpha) {
    const uint32_t p = params.p;
    const uint32_t m = params.m;
    alpha %= p;
    tr_a2 %= p;
    if (alpha == 0) throw std::invalid_argument("alpha must be nonzero");
    if (m % 2 == 1) {
        const int64_t eps = *params.epsilon;
        if (tr_a2 == 0)
            return ipow64(p, m - 2) +
                   eps * eta_prime(-int64_t(alpha), p) * ipow64(p, (m - 1) / 2);
        return ipow64(p, m - 2) -
               eps * eta_prime(-int64_t(tr_a2), p) * ipow64(p, (m - 3) / 2);
    }
    const int64_t tau = *params.tau;
    if (tr_a2 == 0) return ipow64(p, m - 2) + tau * ipow64(p, m / 2 - 1);
    const int64_t sign_s = (params.s % 2 == 0) ? 1 : -1;
    return ipow64(p, m - 2) -
           sign_s * tau * eta_prime(int64_t(alpha) * tr_a2, p) * ipow64(p, m / 2 - 1);
}

uint64_t n_a_bruteforce(const ExtField& field, const FieldElement& a, uint32_t alpha) {
    alpha %= field.p();
    uint64_t count = 0;
    for (uint64_t i = 0; i < field.q(); ++i) {
        FieldElement x = field.element(i);
        if (field.trace_fast(field.mul(x, x).index()) != alpha) continue;
        count += (field.trace_fast(field.mul(a, x).index()) == 0);
    }
    return count;
}

std::vector<uint8_t> codeword(const ExtField& field, const DefiningSet& D,
                              const FieldElement& a) {
    std::vector<uint8_t> out(D.size());
    for (uint64_t j = 0; j < D.size(); ++j)
        out[j] = uint8_t(
            field.trace_fast(field.mul(a, field.element(D.element_indices[j])).index()));
    return out;
}

uint64_t WeightDistribution::distinct_codewords(uint32_t p) const {
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k; ++i) pk *= p;
    return pk;
}

WeightDistribution weight_distribution(const ExtField& field, uint32_t alpha,
                                       int threads) {
    const DefiningSet D = defining_set(field, alpha);
    const detail::SweepPlan plan(field, D.element_indices);
    const uint64_t q = field.q();
    const uint64_t n = D.size();
    const uint64_t nchunks = (q + kChunk - 1) / kChunk;

    std::vector<std::vector<uint64_t>> local(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
#endif
    for (int64_t c = 0; c < int64_t(nchunks); ++c) {
        const uint64_t lo = uint64_t(c) * kChunk;
        const uint64_t hi = std::min(lo + kChunk, q);
        std::vector<uint64_t> hist(n + 1, 0);
        plan.sweep_weights(lo, hi, [&](uint64_t, uint64_t wt) { ++hist[wt]; });
        local[size_t(c)] = std::move(hist);
    }

    std::vector<uint64_t> hist(n + 1, 0);
    for (const auto& h : local)
        for (uint64_t w = 0; w <= n; ++w) hist[w] += h[w];

    WeightDistribution out;
    out.n = n;
    for (uint64_t w = 0; w <= n; ++w)
        if (hist[w]) out.weights[w] = hist[w];
    out.k = field.m() - log_p(hist[0], field.p());
    out.d = 0;
    for (uint64_t w = 1; w <= n; ++w)
        if (hist[w]) {
            out.d = w;
            break;
        }
    return out;
}

WeightDistribution weight_distribution_reference(const ExtField& field, uint32_t alpha) {
    const DefiningSet D = defining_set(field, alpha);
    WeightDistribution out;
    out.n = D.size();
    uint64_t zero_sources = 0;
    for (uint64_t i = 0; i < field.q(); ++i) {
        const std::vector<uint8_t> w = codeword(field, D, field.element(i));
        uint64_t wt = 0;
        for (uint8_t sym : w) wt += (sym != 0);
        ++out.weights[wt];
        zero_sources += (wt == 0);
    }
    out.k = field.m() - log_p(zero_sources, field.p());
    out.d = 0;
    for (const auto& [w, f] : out.weights)
        if (w > 0) {
            out.d = w;
            break;
        }
    return out;
}

std::vector<uint32_t> weight_by_source(const ExtField& field, const DefiningSet& D,
                                       int threads) {
    const detail::SweepPlan plan(field, D.element_indices);
    const uint64_t q = field.q();
    std::vector<uint32_t> out(q, 0);
    const uint64_t nchunks = (q + kChunk - 1) / kChunk;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
#endif
    for (int64_t c = 0; c < int64_t(nchunks); ++c) {
        const uint64_t lo = uint64_t(c) * kChunk;
        const uint64_t hi = std::min(lo + kChunk, q);
        plan.sweep_weights(lo, hi,
                           [&](uint64_t a, uint64_t wt) { out[a] = uint32_t(wt); });
    }
    return out;
}

std::vector<std::vector<uint64_t>> compositions_for_sources(
    const ExtField& field, const DefiningSet& D, const std::vector<uint64_t>& sources,
    int threads) {
    const detail::SweepPlan plan(field, D.element_indices);
    const uint32_t p = field.p();
    const uint64_t q = field.q();
    std::vector<std::vector<uint64_t>> out(sources.size());

    // sources must be ascending for the chunk partition below
    for (size_t i = 1; i < sources.size(); ++i)
        if (sources[i] <= sources[i - 1])
            throw std::invalid_argument("sources must be strictly ascending");

    const uint64_t nchunks = (q + kChunk - 1) / kChunk;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
#endif
    for (int64_t c = 0; c < int64_t(nchunks); ++c) {
        const uint64_t lo = uint64_t(c) * kChunk;
        const uint64_t hi = std::min(lo + kChunk, q);
        auto first = std::lower_bound(sources.begin(), sources.end(), lo);
        auto last = std::lower_bound(sources.begin(), sources.end(), hi);
        if (first == last) continue;
        size_t slot = size_t(first - sources.begin());
        auto next = first;
        plan.sweep(lo, hi, [&](uint64_t a, const uint8_t* symbols) {
            if (next == last || a != *next) return;
            std::vector<uint64_t> comp(p, 0);
            for (uint64_t j = 0; j < plan.n(); ++j) ++comp[symbols[j]];
            out[slot] = std::move(comp);
            ++slot;
            ++next;
        });
    }
    return out;
}

Theorem1Prediction theorem1_prediction(const Parameters& params, uint32_t alpha) {
    const uint32_t p = params.p;
    const uint32_t m = params.m;
    alpha %= p;
    if (alpha == 0) throw std::invalid_argument("alpha must be nonzero");
    if (m < 2) throw std::invalid_argument("no closed-form instantiation for m = 1");

    Theorem1Prediction out;
    out.k = m;
    out.weights[0] = 1;

    auto add_class = [&](int64_t w, int64_t freq) {
        if (w < 0 || freq < 0) throw std::logic_error("negative table entry");
        if (freq == 0) return;
        if (w == 0) out.degenerate = true;
        out.weights[uint64_t(w)] += uint64_t(freq);
    };

    const int64_t w_base = int64_t(p - 1) * ipow64(p, m - 2);
    if (m % 2 == 1) {
        const int64_t eps = *params.epsilon;
        const int e1 = eta_prime(-1, p);
        const int ea = eta_prime(-int64_t(alpha), p);
        out.n = uint64_t(ipow64(p, m - 1) + ea * eps * ipow64(p, (m - 1) / 2));
        const int64_t pw = ipow64(p, (m - 3) / 2);
        const int64_t half = (p - 1) / 2;
        add_class(w_base, ipow64(p, m - 1) - 1);
        add_class(w_base + eps * (e1 + int64_t(p) * ea) * pw,
                  half * (ipow64(p, m - 1) + e1 * eps * ipow64(p, (m - 1) / 2)));
        add_class(w_base + eps * (-e1 + int64_t(p) * ea) * pw,
                  half * (ipow64(p, m - 1) - e1 * eps * ipow64(p, (m - 1) / 2)));
    } else {
        const int64_t tau = *params.tau;
        const int64_t pw = ipow64(p, m / 2 - 1);
        out.n = uint64_t(ipow64(p, m - 1) + tau * ipow64(p, (m - 2) / 2));
        add_class(w_base, int64_t(p + 1) / 2 * ipow64(p, m - 1) -
                              tau * int64_t(p - 1) / 2 * pw - 1);
        add_class(w_base + 2 * tau * pw,
                  int64_t(p - 1) / 2 * (ipow64(p, m - 1) + tau * pw));
    }
    return out;
}

Theorem1Verdict verify_theorem1(const ExtField& field, uint32_t alpha, int threads) {
    Theorem1Verdict out;
    out.predicted = theorem1_prediction(field.params(), alpha);
    out.measured = weight_distribution(field, alpha, threads);
    out.degenerate = out.predicted.degenerate;
    out.length_match = out.predicted.n == out.measured.n;
    out.dimension_match = out.predicted.k == out.measured.k;
    out.histogram_match = out.predicted.weights == out.measured.weights;
    return out;
}

std::vector<std::vector<uint8_t>> generator_matrix(const ExtField& field,
                                                   uint32_t alpha) {
    const DefiningSet D = defining_set(field, alpha);
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(field.m());
    for (uint32_t i = 0; i < field.m(); ++i) {
        std::vector<uint32_t> c(field.m(), 0);
        c[i] = 1;
        rows.push_back(codeword(field, D, field.from_coeffs(c)));
    }
    return rows;
}

uint32_t matrix_rank_mod_p(std::vector<std::vector<uint8_t>> rows, uint32_t p) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    uint32_t rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < ncols; ++col) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        // scale pivot row to 1
        uint32_t lead = rows[r][col];
        uint32_t inv = 1;
        for (uint32_t t = 1; t < p; ++t)
            if (t * lead % p == 1) { inv = t; break; }
        for (size_t j = col; j < ncols; ++j)
            rows[r][j] = uint8_t(rows[r][j] * inv % p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            uint32_t f = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = uint8_t((rows[i][j] + (p - f) * rows[r][j]) % p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace cccforge
