#pragma once

#include <cstddef>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yf/f_coeffs.hpp"
#include "yf/numeric.hpp"
#include "yf/word.hpp"

namespace yf {

// Path counting in the jump graph: D(w, v, n) is the number of weakly
// increasing chains w = u_0 <= u_1 <= ... <= u_n = v. D(w, v, 0) = [w = v].
//
// Three engines compute D independently and keep private caches so that a
// fault in one cannot leak into another. None of them is thread-safe; use
// one instance per thread.

/// Saturated chains from `from` to `to` in the Hasse diagram (level DP over
/// covers_up). 1 for equal words, 0 when unreachable.
BigInt chains_saturated(const Word& from, const Word& to);

/// Defining recursion D(w, v, n) = sum over u in r(v) of D(w, u, n - 1).
class OracleCounter {
public:
    BigInt count(const Word& w, const Word& v, std::size_t n);

private:
    const std::vector<BigInt>& series(const Word& w, const Word& v, std::size_t n);
    const std::vector<Word>& down_set(const Word& v);

    std::unordered_map<std::pair<Word, Word>, std::vector<BigInt>, WordPairHash> cache_;
    std::unordered_map<Word, std::vector<Word>, WordHash> down_sets_;
};

/// Sum recursions dispatched on the first digits of (w, v). Each pair keeps
/// its whole series D(w, v, 0..n), so extending to n costs O(n) big-integer
/// operations per reachable pair.
class RecursiveCounter {
public:
    BigInt count(const Word& w, const Word& v, std::size_t n);

private:
    const std::vector<BigInt>& series(const Word& w, const Word& v, std::size_t n);

    std::unordered_map<std::pair<Word, Word>, std::vector<BigInt>, WordPairHash> cache_;
};

/// Closed form sum_i F(w, v, i) * binom(top_offset + n - 1, bottom - i).
class ClosedFormCounter {
public:
    BigInt count(const Word& w, const Word& v, std::size_t n);

    FTable& f_table() { return f_table_; }

private:
    FTable f_table_;
};

BigInt jump_paths_oracle(const Word& w, const Word& v, std::size_t n);
BigInt jump_paths_theorem(const Word& w, const Word& v, std::size_t n);
BigInt jump_paths_closed(const Word& w, const Word& v, std::size_t n);

enum class CountMethod { oracle, recursive, closed };

/// "oracle" | "recursive" | "closed"; throws std::invalid_argument otherwise.
CountMethod parse_count_method(std::string_view name);

BigInt jump_paths(const Word& w, const Word& v, std::size_t n, CountMethod method);

} // namespace yf
