#include "yf/path_count.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace yf {

BigInt chains_saturated(const Word& from, const Word& to)
{
    if (to.rank() < from.rank()) return 0;

    // Up-moves never shorten a word or remove a 2, so anything longer or
    // with more twos than `to` is a dead end.
    std::map<Word, BigInt> level{{from, BigInt(1)}};
    for (std::size_t step = from.rank(); step < to.rank(); ++step) {
        std::map<Word, BigInt> next;
        for (const auto& [u, c] : level)
            for (const Word& x : covers_up(u))
                if (x.length() <= to.length() && x.twos() <= to.twos()) next[x] += c;
        level = std::move(next);
    }
    auto it = level.find(to);
    return it == level.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------

const std::vector<Word>& OracleCounter::down_set(const Word& v)
{
    if (auto it = down_sets_.find(v); it != down_sets_.end()) return it->second;
    return down_sets_.emplace(v, ancestors(v)).first->second;
}

const std::vector<BigInt>& OracleCounter::series(const Word& w, const Word& v, std::size_t n)
{
    auto& own = cache_[{w, v}];
    if (own.size() > n) return own;

    const std::vector<Word>& below = down_set(v);
    if (n > 0)
        for (const Word& x : below)
            if (x != v) series(w, x, n - 1);

    if (own.empty()) own.push_back(w == v ? 1 : 0);
    for (std::size_t k = own.size(); k <= n; ++k) {
        BigInt sum = 0;
        for (const Word& x : below)
            sum += (x == v) ? own[k - 1] : cache_.at({w, x})[k - 1];
        own.push_back(std::move(sum));
    }
    return own;
}

BigInt OracleCounter::count(const Word& w, const Word& v, std::size_t n)
{
    return series(w, v, n)[n];
}

// ---------------------------------------------------------------------------

namespace {

// out[k] = base(k) + sum_{m=1..k} (m + shift) * c[m], for k = 1..n.
void accumulate_weighted(std::vector<BigInt>& out, const std::vector<BigInt>& c, long shift)
{
    BigInt running = 0;
    for (std::size_t m = 1; m < out.size(); ++m) {
        running += (static_cast<long>(m) + shift) * c[m];
        out[m] += running;
    }
}

} // namespace

const std::vector<BigInt>& RecursiveCounter::series(const Word& w, const Word& v, std::size_t n)
{
    auto& own = cache_[{w, v}];
    if (own.size() > n) return own;

    std::vector<BigInt> out(n + 1, BigInt(0));
    if (v.empty()) {
        for (auto& x : out) x = w.empty() ? 1 : 0;
    } else if (leq(w, v)) {
        out[0] = (w == v) ? 1 : 0;
        const char top = v.front();
        const Word rest = v.tail();

        if (w.empty()) {
            const auto& c = series(w, rest, n);
            // D(e,1v,n) = sum D(e,v,m);  D(e,2v,n) = sum m D(e,v,m)
            if (top == '1') {
                BigInt running = 0;
                for (std::size_t m = 1; m <= n; ++m) {
                    running += c[m];
                    out[m] = running;
                }
            } else {
                accumulate_weighted(out, c, 0);
            }
        } else {
            const Word w_rest = w.tail();
            const auto& same = series(w, rest, n);
            if (w.front() == '1' && top == '1') {
                // D(1w,1v,n) = [w=v] + sum D(1w,v,m)
                const long indicator = (w_rest == rest) ? 1 : 0;
                BigInt running = 0;
                for (std::size_t m = 1; m <= n; ++m) {
                    running += same[m];
                    out[m] = indicator + running;
                }
            } else if (w.front() == '1') {
                // D(1w,2v,n) = sum D(w,v,m) + sum (m-1) D(1w,v,m)
                const auto& shorter = series(w_rest, rest, n);
                BigInt running = 0;
                for (std::size_t m = 1; m <= n; ++m) {
                    running += shorter[m];
                    out[m] = running;
                }
                accumulate_weighted(out, same, -1);
            } else if (top == '1') {
                // D(2w,1v,n) = sum D(2w,v,m)
                BigInt running = 0;
                for (std::size_t m = 1; m <= n; ++m) {
                    running += same[m];
                    out[m] = running;
                }
            } else {
                // D(2w,2v,n) = D(w,v,n) + sum (m-1) D(2w,v,m)
                const auto& shorter = series(w_rest, rest, n);
                for (std::size_t m = 1; m <= n; ++m) out[m] = shorter[m];
                accumulate_weighted(out, same, -1);
            }
        }
    }
    own = std::move(out);
    return own;
}

BigInt RecursiveCounter::count(const Word& w, const Word& v, std::size_t n)
{
    return series(w, v, n)[n];
}

// ---------------------------------------------------------------------------

BigInt ClosedFormCounter::count(const Word& w, const Word& v, std::size_t n)
{
    if (n == 0) return (w == v) ? 1 : 0;
    if (!leq(w, v)) return 0;

    const BinomialShape shape = binomial_shape(w, v);
    const FVector& f = f_table_.f_gen(w, v);
    const unsigned long top = static_cast<unsigned long>(shape.top_offset) + n - 1;
    BigInt total = 0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const long lower = shape.bottom - static_cast<long>(i);
        if (lower < 0) continue;
        total += f.coeffs[i] * binom(top, static_cast<unsigned long>(lower));
    }
    return total;
}

// ---------------------------------------------------------------------------

BigInt jump_paths_oracle(const Word& w, const Word& v, std::size_t n)
{
    return OracleCounter{}.count(w, v, n);
}

BigInt jump_paths_theorem(const Word& w, const Word& v, std::size_t n)
{
    return RecursiveCounter{}.count(w, v, n);
}

BigInt jump_paths_closed(const Word& w, const Word& v, std::size_t n)
{
    return ClosedFormCounter{}.count(w, v, n);
}

CountMethod parse_count_method(std::string_view name)
{
    if (name == "oracle") return CountMethod::oracle;
    if (name == "recursive") return CountMethod::recursive;
    if (name == "closed") return CountMethod::closed;
    throw std::invalid_argument("unknown counting method '" + std::string(name) + "'");
}

BigInt jump_paths(const Word& w, const Word& v, std::size_t n, CountMethod method)
{
    switch (method) {
    case CountMethod::oracle: return jump_paths_oracle(w, v, n);
    case CountMethod::recursive: return jump_paths_theorem(w, v, n);
    case CountMethod::closed: return jump_paths_closed(w, v, n);
    }
    throw std::logic_error("unreachable counting method");
}

} // namespace yf
