#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "yf/numeric.hpp"
#include "yf/path_count.hpp"
#include "yf/q_poly.hpp"
#include "yf/word.hpp"

namespace yf {

/// Parameters of one central measure on jump-graph paths of YF^K:
/// the tail word and p in (0, 1]. p = 1 is the measure concentrated on
/// the root (every path stays at e).
struct MeasureParams {
    std::size_t max_twos = 0; // K
    Word tail;
    BigRat p;

    /// Validates is_valid_tail(tail, K) and 0 < p <= 1; throws
    /// std::invalid_argument otherwise.
    static MeasureParams make(std::size_t max_twos, Word tail, BigRat p);
};

enum class SupportKind { q_ratio, ones_prefix, zero };

struct SupportCase {
    SupportKind kind = SupportKind::zero;
    std::size_t ones = 0; // W for ones_prefix, else 0

    friend bool operator==(const SupportCase&, const SupportCase&) = default;
};

/// q_ratio when w <= tail, ones_prefix(W) when w = 1^W tail with W >= 1,
/// zero otherwise.
SupportCase classify(const Word& w, const Word& tail);
SupportCase classify(const Word& w, const MeasureParams& params);

/// Exact evaluation of one central measure. Caches path counts, Q values
/// and measure values; not thread-safe.
class CentralMeasure {
public:
    explicit CentralMeasure(MeasureParams params);

    const MeasureParams& params() const { return params_; }

    /// Measure of all paths through (w, level). mu(w, 0) = [w = e].
    /// Throws std::invalid_argument when twos(w) > K.
    BigRat mu(const Word& w, std::size_t level);

    /// The classified formula without the p = 1 special case; at p = 1 it
    /// reduces to [w = e] on its own.
    BigRat mu_formula(const Word& w, std::size_t level);

    /// Words with length <= max_len and nonzero classification, ordered by
    /// (length, lexicographic).
    std::vector<Word> support(std::size_t max_len) const;

    /// Sum of mu(w, level) over support(max_len). Requires level >= 1.
    BigRat level_mass(std::size_t level, std::size_t max_len);

    /// sum over u in support(max_len), w <= u, of
    ///     mu(u, level + 1) * D(e, w, level) / D(e, u, level + 1),
    /// the truncated successor sum that reproduces mu(w, level).
    BigRat backward_sum(const Word& w, std::size_t level, std::size_t max_len);

    /// D(e, w, n) from the closed-form engine shared with this measure.
    BigInt paths_from_root(const Word& w, std::size_t n);

private:
    MeasureParams params_;
    ClosedFormCounter counter_;
    QTable q_table_;
    BigRat q_root_value_;
    std::map<std::pair<Word, std::size_t>, BigRat> mu_cache_;
};

/// One vertex (v_m, n_m) of a sequence approaching the boundary.
struct PrelimitVertex {
    Word word;
    std::size_t steps = 0;

    friend bool operator==(const PrelimitVertex&, const PrelimitVertex&) = default;
};

/// D(e, w, l) D(w, v_m, n_m - l) / D(e, v_m, n_m). Requires n_m > l.
BigRat prelimit_mu(const Word& v_m, std::size_t n_m, const Word& w, std::size_t l);
BigRat prelimit_mu(ClosedFormCounter& counter, const Word& v_m, std::size_t n_m, const Word& w,
                   std::size_t l);

/// v_m = prefix 1^m tail and n_m = max(1, ceil(p / (1 - p) * length(v_m))),
/// so that n_m / (n_m + length(v_m)) -> p while the ones run before the tail
/// grows without bound. Requires p < 1 and twos(v_m) <= K.
PrelimitVertex schedule(const MeasureParams& params, std::size_t m, const Word& prefix = Word());

struct ConvergenceRow {
    std::size_t m = 0;
    std::size_t n_m = 0;
    BigRat value;
    BigRat abs_error;
};

/// Prelimit values along schedule(params, m, prefix) for each m, with the
/// exact distance to mu(w, l).
std::vector<ConvergenceRow> convergence_table(const MeasureParams& params, const Word& w,
                                              std::size_t l, std::span<const std::size_t> m_list,
                                              const Word& prefix = Word());

/// Draws paths e = w_0, w_1, ..., w_L from a central measure using the
/// cotransition weights
///     P(u | w at level l) = mu(u, l+1) D(e, w, l) / (D(e, u, l+1) mu(w, l)),  w <= u.
/// Candidates are taken by increasing length (capped at max_len) until their
/// exact cumulative weight reaches 1 - tol, then renormalized.
class PathSampler {
public:
    /// Requires p < 1 and 0 < tol < 1.
    PathSampler(MeasureParams params, BigRat tol, std::size_t max_len = 60);

    std::vector<Word> sample(std::size_t levels, std::uint64_t seed);
    std::vector<Word> sample(std::size_t levels, std::mt19937_64& rng);

    CentralMeasure& measure() { return measure_; }

private:
    struct Transition {
        std::vector<Word> targets;
        std::vector<double> cdf;
    };

    const Transition& transition(const Word& from, std::size_t level);

    CentralMeasure measure_;
    BigRat tol_;
    std::size_t max_len_;
    std::map<std::pair<Word, std::size_t>, Transition> transitions_;
};

} // namespace yf
