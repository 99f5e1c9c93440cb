#include "anho/poly.hpp"

#include <stdexcept>

namespace anho {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const real& c) {
    if (c == 0) return Poly();
    return Poly(std::vector<real>{c});
}

Poly Poly::monomial(int k, const real& c) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative power");
    if (c == 0) return Poly();
    std::vector<real> v(k + 1, real(0));
    v[k] = c;
    return Poly(std::move(v));
}

real Poly::operator()(const real& u) const {
    real acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * u + c_[k];
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<real> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = real(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::times_u_pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::times_u_pow: negative power");
    if (is_zero() || k == 0) return *this;
    std::vector<real> v(c_.size() + k, real(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& q) {
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), real(0));
    for (std::size_t k = 0; k < q.c_.size(); ++k) c_[k] += q.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), real(0));
    for (std::size_t k = 0; k < q.c_.size(); ++k) c_[k] -= q.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const real& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<real> v(p.c_.size() + q.c_.size() - 1, real(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(v));
}

Poly hermite(int n) {
    if (n < 0) throw std::invalid_argument("hermite: negative index");
    return hermite_ladder(n).back();
}

std::vector<Poly> hermite_ladder(int n) {
    if (n < 0) throw std::invalid_argument("hermite_ladder: negative index");
    std::vector<Poly> h;
    h.reserve(n + 1);
    h.push_back(Poly::constant(1));
    if (n == 0) return h;
    h.push_back(Poly::monomial(1, 2));
    for (int k = 1; k < n; ++k)
        h.push_back(real(2) * h[k].times_u_pow(1) - real(2 * k) * h[k - 1]);
    return h;
}

void HermiteCoeffs::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void HermiteCoeffs::set_coeff(int k, const real& v) {
    if (k < 0) throw std::invalid_argument("HermiteCoeffs::set_coeff: negative index");
    if (k >= static_cast<int>(c_.size())) {
        if (v == 0) return;
        c_.resize(k + 1, real(0));
    }
    c_[k] = v;
    trim();
}

real HermiteCoeffs::operator()(const real& u) const {
    // Clenshaw for the recurrence H_{k+1} = 2u H_k - 2k H_{k-1}:
    //   b_k = c_k + 2u b_{k+1} - 2(k+1) b_{k+2},  result = b_0.
    real b1 = 0, b2 = 0;
    const real two_u = 2 * u;
    for (int k = max_index(); k >= 0; --k) {
        real b0 = c_[k] + two_u * b1 - real(2 * (k + 1)) * b2;
        b2 = b1;
        b1 = b0;
    }
    return b1;
}

HermiteCoeffs HermiteCoeffs::derivative() const {
    if (c_.size() <= 1) return HermiteCoeffs();
    std::vector<real> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = real(2 * k) * c_[k];
    return HermiteCoeffs(std::move(d));
}

HermiteCoeffs HermiteCoeffs::times_u() const {
    if (is_zero()) return HermiteCoeffs();
    std::vector<real> v(c_.size() + 1, real(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        v[k + 1] += c_[k] / 2;
        if (k >= 1) v[k - 1] += real(k) * c_[k];
    }
    return HermiteCoeffs(std::move(v));
}

HermiteCoeffs HermiteCoeffs::times_u_pow(int k) const {
    if (k < 0) throw std::invalid_argument("HermiteCoeffs::times_u_pow: negative power");
    HermiteCoeffs out = *this;
    for (int i = 0; i < k; ++i) out = out.times_u();
    return out;
}

Poly HermiteCoeffs::to_poly() const {
    if (is_zero()) return Poly();
    auto ladder = hermite_ladder(max_index());
    Poly out;
    for (int k = 0; k <= max_index(); ++k)
        if (c_[k] != 0) out += c_[k] * ladder[k];
    return out;
}

HermiteCoeffs HermiteCoeffs::operator-() const {
    HermiteCoeffs p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

HermiteCoeffs& HermiteCoeffs::operator+=(const HermiteCoeffs& q) {
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), real(0));
    for (std::size_t k = 0; k < q.c_.size(); ++k) c_[k] += q.c_[k];
    trim();
    return *this;
}

HermiteCoeffs& HermiteCoeffs::operator-=(const HermiteCoeffs& q) {
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), real(0));
    for (std::size_t k = 0; k < q.c_.size(); ++k) c_[k] -= q.c_[k];
    trim();
    return *this;
}

HermiteCoeffs& HermiteCoeffs::operator*=(const real& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

HermiteCoeffs& HermiteCoeffs::axpy(const real& a, const HermiteCoeffs& q) {
    if (a == 0 || q.is_zero()) return *this;
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), real(0));
    for (std::size_t k = 0; k < q.c_.size(); ++k) c_[k] += a * q.c_[k];
    trim();
    return *this;
}

HermiteCoeffs to_hermite(const Poly& p) {
    int d = p.degree();
    if (d < 0) return HermiteCoeffs();
    auto ladder = hermite_ladder(d);
    std::vector<real> work = p.coeffs();
    std::vector<real> out(d + 1, real(0));
    // Eliminate from the top: the leading coefficient of H_k is 2^k, and H_k
    // only has terms of parity k.
    for (int k = d; k >= 0; --k) {
        if (work[k] == 0) continue;
        real ck = work[k] / ladder[k].coeff(k);
        out[k] = ck;
        for (int j = k % 2; j <= k; j += 2) work[j] -= ck * ladder[k].coeff(j);
    }
    return HermiteCoeffs(std::move(out));
}

}  // namespace anho
