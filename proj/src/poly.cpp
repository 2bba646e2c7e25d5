#include "yf/poly.hpp"

#include <algorithm>

namespace yf {

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

Poly Poly::constant(BigInt c)
{
    return Poly(std::vector<BigInt>{std::move(c)});
}

Poly Poly::variable()
{
    return Poly(std::vector<BigInt>{0, 1});
}

Poly Poly::one_minus_variable()
{
    return Poly(std::vector<BigInt>{1, -1});
}

void Poly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Poly::coeff(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
}

BigRat Poly::eval(const BigRat& p) const
{
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= p;
        acc += BigRat(*it);
    }
    acc.canonicalize();
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const BigInt& c)
{
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

std::string Poly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string monomial;
        if (i == 1) monomial = "p";
        if (i > 1) monomial = "p^" + std::to_string(i);
        if (monomial.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += monomial;
        else
            out += mag.get_str() + "*" + monomial;
    }
    return out;
}

std::string Poly::to_array_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].get_str();
    }
    return out + "]";
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly scale(const BigInt& c, const Poly& a) { return c * a; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly derivative(const Poly& a) { return a.derivative(); }
BigRat eval(const Poly& a, const BigRat& p) { return a.eval(p); }

Poly pow(Poly base, std::size_t exponent)
{
    Poly result = Poly::constant(1);
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

} // namespace yf
