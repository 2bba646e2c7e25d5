#include "yf/f_coeffs.hpp"

#include <stdexcept>

#include "yf/path_count.hpp"

namespace yf {

namespace {

const BigInt& at_or_zero(const std::vector<BigInt>& v, long i)
{
    static const BigInt zero = 0;
    return (i >= 0 && static_cast<std::size_t>(i) < v.size()) ? v[static_cast<std::size_t>(i)] : zero;
}

} // namespace

BinomialShape binomial_shape(const Word& w, const Word& v)
{
    auto [left, right] = strip_common_suffix(w, v);
    auto s = [](std::size_t x) { return static_cast<long>(x); };
    return {s(right.length()) - s(left.twos()), s(right.rank()) - s(left.rank()),
            s(right.twos()) - s(left.length())};
}

const FVector& FTable::store(const Word& w, const Word& v, std::vector<BigInt> coeffs)
{
    auto [it, inserted] = cache_.try_emplace({w, v}, FVector{w, v, std::move(coeffs)});
    return it->second;
}

const FVector& FTable::f_eps(const Word& v)
{
    const Word root;
    if (auto it = cache_.find({root, v}); it != cache_.end()) return it->second;

    // F(e, 1v, .) = F(e, v, .): drop the leading run of ones.
    const auto first_two = v.digits().find('2');
    if (first_two == std::string::npos) return store(root, v, {BigInt(1)});
    if (first_two > 0) {
        const FVector& inner = f_eps(Word::from_digits(v.digits().substr(first_two)));
        return store(root, v, inner.coeffs);
    }

    const Word rest = v.tail();
    const std::vector<BigInt> prev = f_eps(rest).coeffs;
    const long rank = static_cast<long>(rest.rank());
    const long twos = static_cast<long>(rest.twos());

    // One loop covers the i = 0 and top bullets through the zero convention.
    std::vector<BigInt> out(static_cast<std::size_t>(twos + 2));
    for (long i = 0; i <= twos + 1; ++i)
        out[static_cast<std::size_t>(i)] =
            (rank + 1 - i) * at_or_zero(prev, i) + (twos + 2 - i) * at_or_zero(prev, i - 1);
    return store(root, v, std::move(out));
}

const FVector& FTable::f_gen(const Word& w, const Word& v)
{
    if (w.empty()) return f_eps(v);
    if (auto it = cache_.find({w, v}); it != cache_.end()) return it->second;
    if (!leq(w, v))
        throw std::domain_error("F(" + w.str() + ", " + v.str() + ") is undefined: " + w.str() +
                                " is not below " + v.str());

    if (single_chain(w, v)) return store(w, v, {BigInt(1)});

    // F(w, 1v, .) = F(w, v, .). Outside the base case w <= 1v forces w <= v.
    Word cur = v;
    while (cur.front() == '1') {
        cur = cur.tail();
        if (single_chain(w, cur)) return store(w, v, {BigInt(1)});
    }
    if (cur != v) {
        std::vector<BigInt> coeffs = f_gen(w, cur).coeffs;
        return store(w, v, std::move(coeffs));
    }

    // cur = 2v'. The F(w, v', .) terms vanish when w is not below v'.
    const Word rest = cur.tail();
    const Word w_rest = w.tail();
    const std::vector<BigInt> from_rest = f_gen(w_rest, rest).coeffs;
    std::vector<BigInt> same_w;
    long bottom = 0;
    long degree = 0;
    bool w_rest_is_suffix = false;
    if (leq(w, rest)) {
        same_w = f_gen(w, rest).coeffs;
        const auto shape = binomial_shape(w, rest);
        bottom = shape.bottom;
        degree = shape.degree;
        w_rest_is_suffix = strip_common_suffix(w, rest).left.empty();
    }
    const bool shifted = w.front() == '1' && w_rest_is_suffix;

    const long top = binomial_shape(w, cur).degree;
    std::vector<BigInt> out(static_cast<std::size_t>(top + 1));
    for (long i = 0; i <= top; ++i) {
        BigInt x = at_or_zero(from_rest, i);
        if (shifted) x += at_or_zero(from_rest, i - 1);
        x += (bottom + 1 - i) * at_or_zero(same_w, i);
        x += (degree + 1 - i) * at_or_zero(same_w, i - 1);
        out[static_cast<std::size_t>(i)] = std::move(x);
    }
    return store(w, v, std::move(out));
}

FVector f_eps(const Word& v)
{
    FTable table;
    return table.f_eps(v);
}

FVector f_gen(const Word& w, const Word& v)
{
    FTable table;
    return table.f_gen(w, v);
}

std::vector<FCounterexample> f_consistency_report(std::size_t max_rank, std::size_t max_twos,
                                                  std::size_t n_max)
{
    std::vector<Word> all;
    for (std::size_t r = 0; r <= max_rank; ++r)
        for_each_word_of_rank(r, max_twos, [&](const Word& u) { all.push_back(u); });

    OracleCounter oracle;
    ClosedFormCounter closed;
    std::vector<FCounterexample> bad;
    for (const Word& v : all) {
        for (const Word& w : all) {
            if (w.rank() > v.rank()) continue;
            for (std::size_t n = 1; n <= n_max; ++n) {
                BigInt a = closed.count(w, v, n);
                BigInt b = oracle.count(w, v, n);
                if (a != b) bad.push_back({w, v, n, std::move(a), std::move(b)});
            }
        }
    }
    return bad;
}

} // namespace yf
