#include "cccforge/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

namespace cccforge {

CyclotomicInt::CyclotomicInt(uint32_t p) : p_(p), c_(p, 0) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

CyclotomicInt CyclotomicInt::integer(uint32_t p, int64_t n) {
    CyclotomicInt out(p);
    out.c_[0] = n;
    return out;
}

CyclotomicInt CyclotomicInt::zeta_pow(uint32_t p, int64_t k) {
    CyclotomicInt out(p);
    out.add_zeta_pow(k);
    return out;
}

void CyclotomicInt::add_zeta_pow(int64_t e, int64_t k) {
    int64_t r = e % int64_t(p_);
    if (r < 0) r += p_;
    c_[size_t(r)] += k;
    if (size_t(r) == p_ - 1) canonicalize();
}

void CyclotomicInt::canonicalize() {
    int64_t last = c_[p_ - 1];
    if (!last) return;
    for (auto& v : c_) v -= last;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    for (uint32_t i = 0; i < p_; ++i) c_[i] += o.c_[i];
    canonicalize();
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    for (uint32_t i = 0; i < p_; ++i) c_[i] -= o.c_[i];
    canonicalize();
    return *this;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    CyclotomicInt out = *this;
    out += o;
    return out;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    CyclotomicInt out = *this;
    out -= o;
    return out;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    CyclotomicInt out(p_);
    for (uint32_t i = 0; i < p_; ++i) {
        if (!c_[i]) continue;
        for (uint32_t j = 0; j < p_; ++j) {
            if (!o.c_[j]) continue;
            uint32_t k = i + j;
            if (k >= p_) k -= p_;
            out.c_[k] += c_[i] * o.c_[j];
        }
    }
    out.canonicalize();
    return out;
}

CyclotomicInt CyclotomicInt::operator*(int64_t k) const {
    CyclotomicInt out = *this;
    for (auto& v : out.c_) v *= k;
    return out;
}

CyclotomicInt CyclotomicInt::operator-() const { return *this * -1; }

CyclotomicInt CyclotomicInt::conjugate() const {
    CyclotomicInt out(p_);
    for (uint32_t i = 0; i < p_; ++i) {
        uint32_t j = i ? p_ - i : 0;
        out.c_[j] = c_[i];
    }
    out.canonicalize();
    return out;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    return p_ == o.p_ && c_ == o.c_;
}

bool CyclotomicInt::is_zero() const {
    for (int64_t v : c_)
        if (v) return false;
    return true;
}

bool CyclotomicInt::is_integer() const {
    for (uint32_t i = 1; i < p_; ++i)
        if (c_[i]) return false;
    return true;
}

int64_t CyclotomicInt::integer_value() const {
    if (!is_integer()) throw std::domain_error("not a rational integer");
    return c_[0];
}

std::complex<double> CyclotomicInt::embed() const {
    std::complex<double> out = 0;
    const double tau = 2.0 * std::acos(-1.0) / double(p_);
    for (uint32_t i = 0; i < p_; ++i)
        if (c_[i])
            out += double(c_[i]) * std::polar(1.0, tau * double(i));
    return out;
}

}  // namespace cccforge
