#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yf/numeric.hpp"
#include "yf/word.hpp"

namespace yf {

/// Coefficients F(w, v, 0..deg) for a comparable pair w <= v, where
/// deg = twos(v_w) - length(w_v).
struct FVector {
    Word from;
    Word to;
    std::vector<BigInt> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
};

/// Shape of the binomial basis for a comparable pair: the path count is
///     D(w, v, n) = sum_i F(w, v, i) * binom(top_offset + n - 1, bottom - i).
/// With (l, r) = (w_v, v_w): top_offset = length(r) - twos(l),
/// bottom = rank(r) - rank(l), degree = twos(r) - length(l).
struct BinomialShape {
    long top_offset;
    long bottom;
    long degree;
};

BinomialShape binomial_shape(const Word& w, const Word& v);

/// Memoized F coefficients keyed by (w, v). Not thread-safe; give each
/// worker its own table.
class FTable {
public:
    /// F(e, v, .) by the root recursion.
    const FVector& f_eps(const Word& v);
    /// F(w, v, .) for w <= v. Throws std::domain_error when w is not <= v.
    const FVector& f_gen(const Word& w, const Word& v);

    std::size_t size() const { return cache_.size(); }
    void clear() { cache_.clear(); }

private:
    const FVector& store(const Word& w, const Word& v, std::vector<BigInt> coeffs);

    std::unordered_map<std::pair<Word, Word>, FVector, WordPairHash> cache_;
};

FVector f_eps(const Word& v);
FVector f_gen(const Word& w, const Word& v);

/// One disagreement between the closed form and the brute-force count.
struct FCounterexample {
    Word from;
    Word to;
    std::size_t steps;
    BigInt closed_form;
    BigInt oracle;
};

/// Compares the closed-form count with the defining-recursion count for all
/// pairs of words of rank <= max_rank with at most K twos (w no higher than
/// v) and 1 <= n <= n_max. An empty result certifies the range.
std::vector<FCounterexample> f_consistency_report(std::size_t max_rank, std::size_t max_twos,
                                                  std::size_t n_max);

} // namespace yf
