#include "yf/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace yf {

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s)
{
    if (!is_decimal_integer(s))
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
}

} // namespace

BigRat parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = 1;
    if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const BigRat& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const BigRat& q)
{
    return q.get_d();
}

std::string format_float(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_float(const BigRat& q)
{
    return format_float(to_double(q));
}

BigInt binom(const BigInt& a, unsigned long b)
{
    if (a < 0) throw std::domain_error("binom: negative top argument");
    if (a < b) return 0;
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b);
    return r;
}

BigInt binom(unsigned long a, unsigned long b)
{
    if (b > a) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

BigInt ceil(const BigRat& q)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

} // namespace yf
