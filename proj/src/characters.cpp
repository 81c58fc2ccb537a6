#include "cccforge/characters.hpp"

#include <stdexcept>
#include <vector>

namespace cccforge {

namespace {

uint64_t modpow(uint64_t base, uint64_t e, uint64_t mod) {
    uint64_t r = 1;
    base %= mod;
    while (e) {
        if (e & 1) r = r * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return r;
}

int64_t ipow64(uint64_t base, uint32_t e) {
    int64_t r = 1;
    while (e--) r *= int64_t(base);
    return r;
}

// +1 for squares, -1 for nonsquares, 0 at 0, indexed by element index.
std::vector<int8_t> eta_table(const ExtField& field) {
    std::vector<int8_t> table(field.q(), -1);
    table[0] = 0;
    for (uint64_t i = 1; i < field.q(); ++i) {
        FieldElement y = field.element(i);
        table[field.mul(y, y).index()] = 1;
    }
    return table;
}

}  // namespace

int eta_prime(int64_t a, uint32_t p) {
    int64_t r = a % int64_t(p);
    if (r < 0) r += p;
    if (r == 0) return 0;
    uint64_t v = modpow(uint64_t(r), (p - 1) / 2, p);
    return v == 1 ? 1 : -1;
}

int eta_ext(const ExtField& field, const FieldElement& x) {
    if (x.is_zero()) return 0;
    FieldElement v = field.pow(x, (field.q() - 1) / 2);
    if (v == field.one()) return 1;
    if (v == field.neg(field.one())) return -1;
    throw std::logic_error("x^{(q-1)/2} is not a sign");
}

CyclotomicInt gauss_sum_enumerated(const ExtField& field) {
    const std::vector<int8_t> eta = eta_table(field);
    CyclotomicInt acc(field.p());
    for (uint64_t i = 1; i < field.q(); ++i)
        acc.add_zeta_pow(field.trace_fast(i), eta[i]);
    return acc;
}

CyclotomicInt gauss_sum_prime_enumerated(uint32_t p) {
    CyclotomicInt acc(p);
    for (uint32_t x = 1; x < p; ++x)
        acc.add_zeta_pow(x, eta_prime(x, p));
    return acc;
}

std::complex<double> GaussClosedForm::embed(uint32_t p) const {
    static const std::complex<double> unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return double(sign) * unit[unit_power & 3] *
           std::pow(double(p), twice_exponent / 2.0);
}

GaussClosedForm gauss_sum_closed_form(uint32_t p, uint32_t m) {
    Parameters params = Parameters::make(p, m);
    GaussClosedForm out;
    out.sign = (m % 2 == 0) ? -1 : 1;  // (-1)^{m-1}
    out.unit_power = int(params.s * m % 4);
    out.twice_exponent = int(m);
    return out;
}

GaussClosedForm gauss_sum_prime_closed_form(uint32_t p) {
    Parameters params = Parameters::make(p, 1);
    GaussClosedForm out;
    out.sign = 1;
    out.unit_power = int(params.s % 4);
    out.twice_exponent = 1;
    return out;
}

CyclotomicInt weil_quadratic_sum(const ExtField& field, const FieldElement& a2,
                                 const FieldElement& a1, const FieldElement& a0) {
    if (a2.is_zero()) throw std::invalid_argument("quadratic coefficient must be nonzero");
    CyclotomicInt acc(field.p());
    for (uint64_t i = 0; i < field.q(); ++i) {
        FieldElement x = field.element(i);
        FieldElement fx = field.add(field.mul(field.add(field.mul(a2, x), a1), x), a0);
        acc.add_zeta_pow(field.trace(fx));
    }
    return acc;
}

CyclotomicInt weil_quadratic_closed_form(const ExtField& field, const FieldElement& a2,
                                         const FieldElement& a1, const FieldElement& a0) {
    if (a2.is_zero()) throw std::invalid_argument("quadratic coefficient must be nonzero");
    // a0 - a1^2 / (4 a2)
    FieldElement four = field.from_residue(4 % field.p());
    FieldElement shift =
        field.sub(a0, field.mul(field.mul(a1, a1), field.inv(field.mul(four, a2))));
    CyclotomicInt out = gauss_sum_enumerated(field);
    out = out * int64_t(eta_ext(field, a2));
    return out * CyclotomicInt::zeta_pow(field.p(), field.trace(shift));
}

CyclotomicInt lemma5_sum_enumerated(const ExtField& field, const FieldElement& a,
                                    uint32_t alpha) {
    const uint32_t p = field.p();
    const uint64_t q = field.q();
    // Tr(avx + ux^2) = v Tr(ax) + u Tr(x^2) for scalars u, v.
    std::vector<uint32_t> tr_ax(q), tr_x2(q);
    for (uint64_t i = 0; i < q; ++i) {
        FieldElement x = field.element(i);
        tr_ax[i] = field.trace_fast(field.mul(a, x).index());
        tr_x2[i] = field.trace_fast(field.mul(x, x).index());
    }
    CyclotomicInt acc(p);
    for (uint32_t u = 1; u < p; ++u)
        for (uint32_t v = 1; v < p; ++v) {
            const int64_t base = -int64_t(u) * alpha;
            for (uint64_t i = 0; i < q; ++i)
                acc.add_zeta_pow(base + int64_t(v) * tr_ax[i] + int64_t(u) * tr_x2[i]);
        }
    return acc;
}

int64_t lemma5_closed_form(const Parameters& params, uint32_t tr_a2, uint32_t alpha) {
    const uint32_t p = params.p;
    const uint32_t m = params.m;
    if (alpha % p == 0) throw std::invalid_argument("alpha must be nonzero");
    if (m % 2 == 1) {
        const int64_t eps = *params.epsilon;
        const int64_t pw = ipow64(p, (m + 1) / 2);
        if (tr_a2 % p == 0)
            return eps * eta_prime(-int64_t(alpha), p) * int64_t(p - 1) * pw;
        return -eps * pw *
               (eta_prime(-int64_t(tr_a2), p) + eta_prime(-int64_t(alpha), p));
    }
    const int64_t tau = *params.tau;
    const int64_t pw = ipow64(p, m / 2);
    if (tr_a2 % p == 0) return tau * int64_t(p - 1) * pw;
    const int64_t sign_s = (params.s % 2 == 0) ? 1 : -1;
    return -tau * pw *
           (sign_s * eta_prime(int64_t(alpha) * tr_a2, p) * int64_t(p) + 1);
}

}  // namespace cccforge
