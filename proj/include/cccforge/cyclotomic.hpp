#ifndef CCCFORGE_CYCLOTOMIC_HPP
#define CCCFORGE_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace cccforge {

/* Exact element of Z[zeta_p], stored as p integer coefficients of
   1, zeta, ..., zeta^{p-1}.  Canonical form has the last coefficient zero
   (subtract it from all, using 1 + zeta + ... + zeta^{p-1} = 0), which makes
   equality a plain coefficient comparison. */
class CyclotomicInt {
  public:
    explicit CyclotomicInt(uint32_t p);
    static CyclotomicInt integer(uint32_t p, int64_t n);
    static CyclotomicInt zeta_pow(uint32_t p, int64_t k);

    uint32_t p() const { return p_; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator*(int64_t k) const;
    CyclotomicInt operator-() const;

    // Accumulate k * zeta^e without allocating.
    void add_zeta_pow(int64_t e, int64_t k = 1);

    // zeta -> zeta^{-1} (complex conjugation).
    CyclotomicInt conjugate() const;

    bool operator==(const CyclotomicInt& o) const;
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }
    bool is_zero() const;

    // True iff the canonical form has no zeta component.
    bool is_integer() const;
    int64_t integer_value() const;  // throws if not an integer

    // Numerical embedding zeta -> exp(2 pi i / p).
    std::complex<double> embed() const;

  private:
    void canonicalize();

    uint32_t p_;
    std::vector<int64_t> c_;
};

}  // namespace cccforge

#endif
