#pragma once

#include "anho/real.hpp"

#include <span>
#include <vector>

namespace anho {

/// Dense polynomial in the dimensionless scaled coordinate u, coefficient of
/// u^k at index k. Immutable-by-convention value type: operations return new
/// polynomials. Invariant: the highest stored coefficient is nonzero unless
/// the polynomial is identically zero (empty coefficient vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<real> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const real& c);
    /// c * u^k
    static Poly monomial(int k, const real& c = 1);

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of u^k; zero outside the stored range.
    real coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : real(0);
    }
    const std::vector<real>& coeffs() const { return c_; }

    /// Horner evaluation.
    real operator()(const real& u) const;

    Poly derivative() const;
    /// Multiply by u^k.
    Poly times_u_pow(int k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const real& s);

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(Poly p, const real& s) { return p *= s; }
    friend Poly operator*(const real& s, Poly p) { return p *= s; }
    friend Poly operator*(const Poly& p, const Poly& q);

    bool operator==(const Poly& q) const { return c_ == q.c_; }

private:
    std::vector<real> c_;
    void trim();
};

/// Physicists' Hermite polynomial H_n (weight e^{-u^2}), from the recurrence
/// H_{k+1} = 2u H_k - 2k H_{k-1}.
Poly hermite(int n);

/// H_0..H_n as polynomials.
std::vector<Poly> hermite_ladder(int n);

/// Expansion sum_k c_k H_k(u) in the physicists' Hermite basis. Dense storage
/// by index; the highest stored index equals the represented degree.
class HermiteCoeffs {
public:
    HermiteCoeffs() = default;
    explicit HermiteCoeffs(std::vector<real> coeffs) : c_(std::move(coeffs)) { trim(); }

    int max_index() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    real coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : real(0);
    }
    const std::vector<real>& coeffs() const { return c_; }
    void set_coeff(int k, const real& v);

    /// Clenshaw evaluation of sum_k c_k H_k(u); numerically stable where the
    /// expanded monomial form is not.
    real operator()(const real& u) const;

    /// d/du, using H_k' = 2k H_{k-1}.
    HermiteCoeffs derivative() const;
    /// Multiply by u, using u H_k = H_{k+1}/2 + k H_{k-1}.
    HermiteCoeffs times_u() const;
    HermiteCoeffs times_u_pow(int k) const;

    Poly to_poly() const;

    HermiteCoeffs operator-() const;
    HermiteCoeffs& operator+=(const HermiteCoeffs& q);
    HermiteCoeffs& operator-=(const HermiteCoeffs& q);
    HermiteCoeffs& operator*=(const real& s);
    /// this += a * q
    HermiteCoeffs& axpy(const real& a, const HermiteCoeffs& q);

    friend HermiteCoeffs operator+(HermiteCoeffs p, const HermiteCoeffs& q) { return p += q; }
    friend HermiteCoeffs operator-(HermiteCoeffs p, const HermiteCoeffs& q) { return p -= q; }
    friend HermiteCoeffs operator*(HermiteCoeffs p, const real& s) { return p *= s; }
    friend HermiteCoeffs operator*(const real& s, HermiteCoeffs p) { return p *= s; }

private:
    std::vector<real> c_;
    void trim();
};

/// Exact change of basis from monomial to Hermite coefficients.
HermiteCoeffs to_hermite(const Poly& p);

}  // namespace anho
