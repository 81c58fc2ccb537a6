#include "cccforge/field.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cccforge {

namespace {

uint64_t ipow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

// ---- polynomial arithmetic over F_p (dense, lowest degree first) ----

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] += uint64_t(a[i]) * b[j];
    // reduce modulo monic f
    size_t deg_f = f.size() - 1;
    for (size_t i = prod.size(); i-- > deg_f;) {
        uint64_t c = prod[i] % p;
        if (c == 0) continue;
        for (size_t j = 0; j < deg_f; ++j)
            prod[i - deg_f + j] += uint64_t(p - f[j]) * c;
        prod[i] = 0;
    }
    Poly out(deg_f, 0);
    for (size_t i = 0; i < deg_f && i < prod.size(); ++i)
        out[i] = uint32_t(prod[i] % p);
    return trim(out);
}

Poly poly_powmod_x(uint64_t e, const Poly& f, uint32_t p) {
    // x^e mod f
    Poly result{1};
    Poly base{0, 1};
    if (f.size() == 2) base = {(p - f[0]) % p};  // deg f = 1: x = -c0
    while (e) {
        if (e & 1) result = poly_mul_mod(result, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    a = trim(std::move(a));
    const Poly bt = trim(b);
    if (bt.empty()) throw std::invalid_argument("division by zero polynomial");
    size_t deg_b = bt.size() - 1;
    if (deg_b == 0) return {};
    uint32_t lead = bt.back();
    uint32_t lead_inv = 1;
    for (uint32_t t = 1; t < p; ++t)
        if (uint64_t(t) * lead % p == 1) { lead_inv = t; break; }
    while (a.size() > deg_b) {
        uint64_t c = uint64_t(a.back()) * lead_inv % p;
        size_t shift = a.size() - 1 - deg_b;
        for (size_t j = 0; j < bt.size(); ++j) {
            uint64_t sub = c * bt[j] % p;
            a[shift + j] = uint32_t((a[shift + j] + p - sub) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Parameters Parameters::make(uint32_t p, uint32_t m) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    if (m < 1) throw std::invalid_argument("m must be positive");
    Parameters out;
    out.p = p;
    out.m = m;
    out.q = ipow(p, m);
    uint64_t half = (p - 1) / 2;
    out.s = half * half;
    if (m % 2 == 1) {
        uint64_t e = out.s * ((m + 1) / 2);
        out.epsilon = (e % 2 == 0) ? 1 : -1;
    } else {
        uint64_t e = out.s * (m / 2);
        out.tau = (e % 2 == 0) ? 1 : -1;
    }
    return out;
}

bool is_irreducible(const Poly& f, uint32_t p) {
    if (f.size() < 2 || f.back() != 1) return false;
    uint32_t m = uint32_t(f.size() - 1);
    if (m == 1) return true;
    // x^{p^m} == x (mod f)
    Poly xq = poly_powmod_x(ipow(p, m), f, p);
    Poly x{0, 1};
    if (trim(xq) != trim(x)) return false;
    // gcd(x^{p^{m/l}} - x, f) = 1 for each prime l | m
    for (uint32_t l : prime_factors(m)) {
        Poly g = poly_powmod_x(ipow(p, m / l), f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        Poly d = poly_gcd(f, g, p);
        if (trim(d).size() != 1) return false;
    }
    return true;
}

Poly find_irreducible(uint32_t p, uint32_t m) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    if (m < 1 || m > 12) throw std::invalid_argument("degree out of range");
    uint64_t count = ipow(p, m);
    for (uint64_t idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        uint64_t t = idx;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = uint32_t(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Poly parse_modulus(const std::string& text, uint32_t p) {
    Poly out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 0 || uint32_t(v) >= p)
            throw std::invalid_argument("modulus coefficient out of range");
        out.push_back(uint32_t(v));
    }
    if (out.size() < 2 || out.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    return out;
}

std::string format_modulus(const Poly& f) {
    std::string out;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f[i]);
    }
    return out;
}

uint64_t max_q() {
    if (const char* env = std::getenv("CCC_FORGE_MAX_Q"))
        return std::strtoull(env, nullptr, 10);
    return 531441;  // 3^12
}

uint64_t FieldElement::index() const {
    uint64_t idx = 0;
    uint64_t pw = 1;
    uint32_t p = field_ ? field_->p() : 0;
    for (uint32_t c : coeffs_) {
        idx += c * pw;
        pw *= p;
    }
    return idx;
}

bool FieldElement::is_zero() const {
    for (uint32_t c : coeffs_)
        if (c) return false;
    return true;
}

ExtField::ExtField(uint32_t p, uint32_t m)
    : params_(Parameters::make(p, m)), modulus_(find_irreducible(p, m)) {
    init();
}

ExtField::ExtField(uint32_t p, uint32_t m, Poly modulus)
    : params_(Parameters::make(p, m)), modulus_(std::move(modulus)) {
    if (modulus_.size() != size_t(m) + 1)
        throw std::invalid_argument("modulus degree must equal m");
    if (!is_irreducible(modulus_, p))
        throw std::invalid_argument("modulus is not irreducible over F_p");
    init();
}

void ExtField::init() {
    if (params_.q > max_q())
        throw std::invalid_argument("q exceeds enumeration cap (set CCC_FORGE_MAX_Q to raise)");
    pow_p_.resize(params_.m + 1);
    pow_p_[0] = 1;
    for (uint32_t i = 1; i <= params_.m; ++i) pow_p_[i] = pow_p_[i - 1] * params_.p;
    basis_traces_.resize(params_.m);
    for (uint32_t i = 0; i < params_.m; ++i) {
        std::vector<uint32_t> c(params_.m, 0);
        c[i] = 1;
        basis_traces_[i] = trace(FieldElement(this, std::move(c)));
    }
}

FieldElement ExtField::zero() const {
    return FieldElement(this, std::vector<uint32_t>(params_.m, 0));
}

FieldElement ExtField::one() const { return from_residue(1); }

FieldElement ExtField::from_residue(uint32_t r) const {
    std::vector<uint32_t> c(params_.m, 0);
    c[0] = r % params_.p;
    return FieldElement(this, std::move(c));
}

FieldElement ExtField::element(uint64_t index) const {
    if (index >= params_.q) throw std::out_of_range("element index out of range");
    std::vector<uint32_t> c(params_.m);
    for (uint32_t i = 0; i < params_.m; ++i) {
        c[i] = uint32_t(index % params_.p);
        index /= params_.p;
    }
    return FieldElement(this, std::move(c));
}

FieldElement ExtField::from_coeffs(std::vector<uint32_t> coeffs) const {
    if (coeffs.size() != params_.m)
        throw std::invalid_argument("coefficient vector must have length m");
    for (uint32_t c : coeffs)
        if (c >= params_.p) throw std::invalid_argument("coefficient out of range");
    return FieldElement(this, std::move(coeffs));
}

FieldElement ExtField::add(const FieldElement& a, const FieldElement& b) const {
    std::vector<uint32_t> c(params_.m);
    for (uint32_t i = 0; i < params_.m; ++i) {
        uint32_t v = a.coeffs_[i] + b.coeffs_[i];
        c[i] = v >= params_.p ? v - params_.p : v;
    }
    return FieldElement(this, std::move(c));
}

FieldElement ExtField::neg(const FieldElement& a) const {
    std::vector<uint32_t> c(params_.m);
    for (uint32_t i = 0; i < params_.m; ++i)
        c[i] = a.coeffs_[i] ? params_.p - a.coeffs_[i] : 0;
    return FieldElement(this, std::move(c));
}

FieldElement ExtField::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement ExtField::mul(const FieldElement& a, const FieldElement& b) const {
    const uint32_t m = params_.m;
    const uint32_t p = params_.p;
    std::vector<uint64_t> prod(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i) {
        if (!a.coeffs_[i]) continue;
        for (uint32_t j = 0; j < m; ++j)
            prod[i + j] += uint64_t(a.coeffs_[i]) * b.coeffs_[j];
    }
    for (uint32_t i = 2 * m - 1; i-- > m;) {
        uint64_t c = prod[i] % p;
        if (!c) continue;
        for (uint32_t j = 0; j < m; ++j)
            prod[i - m + j] += uint64_t(p - modulus_[j]) * c;
    }
    std::vector<uint32_t> out(m);
    for (uint32_t i = 0; i < m; ++i) out[i] = uint32_t(prod[i] % p);
    return FieldElement(this, std::move(out));
}

FieldElement ExtField::pow(const FieldElement& a, uint64_t e) const {
    FieldElement result = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement ExtField::inv(const FieldElement& a) const {
    if (a.is_zero()) throw std::domain_error("inversion of zero");
    return pow(a, params_.q - 2);
}

uint32_t ExtField::trace(const FieldElement& x) const {
    FieldElement acc = x;
    FieldElement frob = x;
    for (uint32_t i = 1; i < params_.m; ++i) {
        frob = pow(frob, params_.p);
        acc = add(acc, frob);
    }
    for (uint32_t i = 1; i < params_.m; ++i)
        if (acc.coeffs_[i] != 0)
            throw std::logic_error("trace left the prime subfield");
    return acc.coeffs_[0];
}

uint32_t ExtField::trace_fast(uint64_t index) const {
    uint64_t acc = 0;
    for (uint32_t i = 0; i < params_.m; ++i) {
        acc += (index % params_.p) * basis_traces_[i];
        index /= params_.p;
    }
    return uint32_t(acc % params_.p);
}

std::vector<FieldElement> ExtField::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(params_.q);
    for (uint64_t i = 0; i < params_.q; ++i) out.push_back(element(i));
    return out;
}

}  // namespace cccforge
