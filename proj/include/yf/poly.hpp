#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "yf/numeric.hpp"

namespace yf {

/// Dense univariate polynomial in p with integer coefficients; index = power.
/// Always normalized: no trailing zero coefficients (the zero polynomial has
/// none at all).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs);
    static Poly constant(BigInt c);
    /// The polynomial p.
    static Poly variable();
    /// The polynomial 1 - p.
    static Poly one_minus_variable();

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t power) const;

    Poly derivative() const;
    BigRat eval(const BigRat& p) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const BigInt& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(const BigInt& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    /// "c0 + c1*p + c2*p^2", skipping zero terms and unit factors ("1 + p").
    std::string to_string() const;
    /// "[c0, c1, ...]"; "[]" for zero.
    std::string to_array_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly scale(const BigInt& c, const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
BigRat eval(const Poly& a, const BigRat& p);

/// Integer power of a polynomial.
Poly pow(Poly base, std::size_t exponent);

} // namespace yf
