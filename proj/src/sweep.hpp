#ifndef CCCFORGE_SWEEP_HPP
#define CCCFORGE_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "cccforge/field.hpp"

namespace cccforge::detail {

/* Incremental evaluation of the symbol vector (Tr(a d_1), ..., Tr(a d_n))
   while a walks the element indices in ascending order.

   Stepping the index a-1 -> a rolls z trailing base-p digits from p-1 to 0
   and increments digit z; modulo p every affected digit moves by +1, so the
   coefficient delta is e_0 + ... + e_z and the symbol update is one
   precomputed row:  step[z][j] = Tr((1 + x + ... + x^z) d_j).

   Chunks may start anywhere: init_symbols rebuilds the vector from the
   base rows, so a partition into index ranges reproduces the serial
   sequence exactly. */
class SweepPlan {
  public:
    SweepPlan(const ExtField& field, const std::vector<uint64_t>& d_indices)
        : p_(field.p()), m_(field.m()), q_(field.q()), n_(d_indices.size()) {
        base_.assign(size_t(m_) * n_, 0);
        step_.assign(size_t(m_) * n_, 0);
        for (uint32_t i = 0; i < m_; ++i) {
            std::vector<uint32_t> c(m_, 0);
            c[i] = 1;
            FieldElement xi = field.from_coeffs(c);
            for (uint64_t j = 0; j < n_; ++j) {
                FieldElement d = field.element(d_indices[j]);
                base_[size_t(i) * n_ + j] =
                    uint8_t(field.trace_fast(field.mul(xi, d).index()));
            }
        }
        for (uint32_t i = 0; i < m_; ++i)
            for (uint64_t j = 0; j < n_; ++j) {
                uint32_t v = (i ? step_[size_t(i - 1) * n_ + j] : 0) +
                             base_[size_t(i) * n_ + j];
                step_[size_t(i) * n_ + j] = uint8_t(v >= p_ ? v - p_ : v);
            }
    }

    uint32_t p() const { return p_; }
    uint64_t q() const { return q_; }
    uint64_t n() const { return n_; }

    void init_symbols(uint64_t a_index, uint8_t* s) const {
        for (uint64_t j = 0; j < n_; ++j) s[j] = 0;
        uint64_t idx = a_index;
        for (uint32_t i = 0; i < m_ && idx; ++i) {
            uint32_t digit = uint32_t(idx % p_);
            idx /= p_;
            if (!digit) continue;
            const uint8_t* row = &base_[size_t(i) * n_];
            for (uint64_t j = 0; j < n_; ++j) {
                uint32_t v = s[j] + uint32_t(digit) * row[j];
                s[j] = uint8_t(v % p_);
            }
        }
    }

    const uint8_t* step_row(uint64_t a_index) const {
        uint32_t z = 0;
        while (a_index % p_ == 0) {
            a_index /= p_;
            ++z;
        }
        return &step_[size_t(z) * n_];
    }

    // Visits every a in [lo, hi) with its symbol vector.
    template <class Visitor>
    void sweep(uint64_t lo, uint64_t hi, Visitor&& visit) const {
        std::vector<uint8_t> s(n_);
        init_symbols(lo, s.data());
        visit(lo, s.data());
        for (uint64_t a = lo + 1; a < hi; ++a) {
            const uint8_t* row = step_row(a);
            uint8_t* sp = s.data();
            for (uint64_t j = 0; j < n_; ++j) {
                uint32_t v = uint32_t(sp[j]) + row[j];
                sp[j] = uint8_t(v >= p_ ? v - p_ : v);
            }
            visit(a, sp);
        }
    }

    // Fused variant reporting only Hamming weights.
    template <class Visitor>
    void sweep_weights(uint64_t lo, uint64_t hi, Visitor&& visit) const {
        std::vector<uint8_t> s(n_);
        init_symbols(lo, s.data());
        uint64_t zeros = 0;
        for (uint64_t j = 0; j < n_; ++j) zeros += (s[j] == 0);
        visit(lo, n_ - zeros);
        for (uint64_t a = lo + 1; a < hi; ++a) {
            const uint8_t* row = step_row(a);
            uint8_t* sp = s.data();
            zeros = 0;
            for (uint64_t j = 0; j < n_; ++j) {
                uint32_t v = uint32_t(sp[j]) + row[j];
                v = v >= p_ ? v - p_ : v;
                sp[j] = uint8_t(v);
                zeros += (v == 0);
            }
            visit(a, n_ - zeros);
        }
    }

  private:
    uint32_t p_;
    uint32_t m_;
    uint64_t q_;
    uint64_t n_;
    std::vector<uint8_t> base_;
    std::vector<uint8_t> step_;
};

}  // namespace cccforge::detail

#endif
