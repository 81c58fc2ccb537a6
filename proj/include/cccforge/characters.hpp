#ifndef CCCFORGE_CHARACTERS_HPP
#define CCCFORGE_CHARACTERS_HPP

#include <complex>
#include <cstdint>

#include "cccforge/cyclotomic.hpp"
#include "cccforge/field.hpp"

namespace cccforge {

// Legendre symbol on F_p (the prime-field quadratic character eta-bar).
int eta_prime(int64_t a, uint32_t p);

// Quadratic character on F_{p^m}; 0 at 0, else x^{(q-1)/2} mapped to +/-1.
int eta_ext(const ExtField& field, const FieldElement& x);

// G(eta, chi_1) = sum_x eta(x) zeta^{Tr(x)}, exact.
CyclotomicInt gauss_sum_enumerated(const ExtField& field);
// G(eta-bar, chi-bar_1) on the prime field.
CyclotomicInt gauss_sum_prime_enumerated(uint32_t p);

/* Symbolic value sign * (sqrt(-1))^unit_power * p^{half_log}.  For the
   extension-field sum half_log = m/2; for the prime-field sum 1/2. */
struct GaussClosedForm {
    int sign = 1;
    int unit_power = 0;      // exponent of sqrt(-1), mod 4
    int twice_exponent = 0;  // magnitude = p^{twice_exponent/2}

    double half_log() const { return twice_exponent / 2.0; }
    std::complex<double> embed(uint32_t p) const;
};

GaussClosedForm gauss_sum_closed_form(uint32_t p, uint32_t m);
GaussClosedForm gauss_sum_prime_closed_form(uint32_t p);

// sum_x zeta^{Tr(a2 x^2 + a1 x + a0)}, exact enumeration.
CyclotomicInt weil_quadratic_sum(const ExtField& field, const FieldElement& a2,
                                 const FieldElement& a1, const FieldElement& a0);
// zeta^{Tr(a0 - a1^2/(4 a2))} * eta(a2) * G(eta, chi_1), for the companion check.
CyclotomicInt weil_quadratic_closed_form(const ExtField& field, const FieldElement& a2,
                                         const FieldElement& a1, const FieldElement& a0);

// sum_{u in F_p^*} zeta^{-u alpha} sum_{v in F_p^*} sum_{x in F_q}
// zeta^{Tr(a v x + u x^2)}, exact.
CyclotomicInt lemma5_sum_enumerated(const ExtField& field, const FieldElement& a,
                                    uint32_t alpha);
// Four-branch closed form; depends on a only through Tr(a^2).  alpha != 0.
int64_t lemma5_closed_form(const Parameters& params, uint32_t tr_a2, uint32_t alpha);

}  // namespace cccforge

#endif
