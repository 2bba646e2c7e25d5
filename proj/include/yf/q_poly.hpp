#pragma once

#include <span>
#include <unordered_map>
#include <utility>

#include "yf/f_coeffs.hpp"
#include "yf/poly.hpp"
#include "yf/word.hpp"

namespace yf {

/// Boundary polynomials Q_{w,v}(p), memoized per (w, v).
///
/// q_eps / q_gen follow the derivative recursions; q_from_f expands the F
/// coefficients in the basis (1-p)^i p^(deg-i). The two routes must agree.
/// Not thread-safe.
class QTable {
public:
    const Poly& q_eps(const Word& v);
    /// Throws std::domain_error when w is not <= v.
    const Poly& q_gen(const Word& w, const Word& v);
    Poly q_from_f(const Word& w, const Word& v);

private:
    const Poly& store(const Word& w, const Word& v, Poly q);

    std::unordered_map<std::pair<Word, Word>, Poly, WordPairHash> cache_;
    FTable f_table_;
};

Poly q_eps(const Word& v);
Poly q_gen(const Word& w, const Word& v);
Poly q_from_f(const Word& w, const Word& v);

/// True iff q(p) > 0 at every sample (exact comparison).
bool positivity_check(const Poly& q, std::span<const BigRat> samples);

} // namespace yf
