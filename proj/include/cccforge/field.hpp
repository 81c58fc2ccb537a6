#ifndef CCCFORGE_FIELD_HPP
#define CCCFORGE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cccforge {

/* Global parameters attached to a field F_{p^m}.  s = ((p-1)/2)^2 drives
   every sign in the closed forms; epsilon is defined for odd m, tau for
   even m. */
struct Parameters {
    uint32_t p = 0;
    uint32_t m = 0;
    uint64_t q = 0;
    uint64_t s = 0;
    std::optional<int> epsilon;  // (-1)^{s(m+1)/2}, odd m only
    std::optional<int> tau;      // (-1)^{s m/2},    even m only

    static Parameters make(uint32_t p, uint32_t m);
};

// Polynomial over F_p, coefficients lowest degree first.
using Poly = std::vector<uint32_t>;

bool is_prime(uint64_t n);
bool is_irreducible(const Poly& f, uint32_t p);

// Minimal monic irreducible of degree m over F_p, in base-p index order
// of the coefficient vector (c_0,...,c_{m-1}).
Poly find_irreducible(uint32_t p, uint32_t m);

// "c_0,c_1,...,c_m" with c_m = 1.
Poly parse_modulus(const std::string& text, uint32_t p);
std::string format_modulus(const Poly& f);

// Enumeration cap; override with environment variable CCC_FORGE_MAX_Q.
uint64_t max_q();

class ExtField;

class FieldElement {
  public:
    FieldElement() = default;

    const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    uint64_t index() const;
    bool is_zero() const;
    const ExtField* field() const { return field_; }

    bool operator==(const FieldElement& other) const {
        return coeffs_ == other.coeffs_;
    }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

  private:
    friend class ExtField;
    FieldElement(const ExtField* f, std::vector<uint32_t> c)
        : field_(f), coeffs_(std::move(c)) {}

    const ExtField* field_ = nullptr;
    std::vector<uint32_t> coeffs_;
};

/* F_{p^m} as F_p[x]/(f).  Immutable after construction; all operations are
   pure and safe to call concurrently. */
class ExtField {
  public:
    // Canonical model: lexicographically minimal irreducible modulus.
    ExtField(uint32_t p, uint32_t m);
    // User-supplied modulus, validated for irreducibility.
    ExtField(uint32_t p, uint32_t m, Poly modulus);

    const Parameters& params() const { return params_; }
    uint32_t p() const { return params_.p; }
    uint32_t m() const { return params_.m; }
    uint64_t q() const { return params_.q; }
    const Poly& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    // Index bijection [0,q) <-> F_{p^m}: index = sum coeffs[i] p^i.
    FieldElement element(uint64_t index) const;
    FieldElement from_coeffs(std::vector<uint32_t> coeffs) const;
    // Embeds a prime-field residue as a constant.
    FieldElement from_residue(uint32_t r) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws on zero
    FieldElement pow(const FieldElement& a, uint64_t e) const;

    // Tr(x) = sum_{i<m} x^{p^i}, computed by Frobenius powers; asserts the
    // result lies in the prime subfield.
    uint32_t trace(const FieldElement& x) const;
    // Same value through the precomputed basis traces.
    uint32_t trace_fast(uint64_t index) const;
    // Tr(x^i) for the power basis.
    const std::vector<uint32_t>& basis_traces() const { return basis_traces_; }

    // All q elements, ascending index order.
    std::vector<FieldElement> enumerate() const;

  private:
    void init();

    Parameters params_;
    Poly modulus_;
    std::vector<uint32_t> basis_traces_;
    std::vector<uint64_t> pow_p_;  // p^i for i <= m
};

}  // namespace cccforge

#endif
