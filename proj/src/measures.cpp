#include "yf/measures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace yf {

MeasureParams MeasureParams::make(std::size_t max_twos, Word tail, BigRat p)
{
    if (!is_valid_tail(tail, max_twos))
        throw std::invalid_argument("invalid tail '" + tail.str() +
                                    "': must be e, or start with 2 and have at most " +
                                    std::to_string(max_twos) + " twos");
    if (p <= 0 || p > 1)
        throw std::invalid_argument("p must lie in (0, 1], got " + format_rational(p));
    p.canonicalize();
    return {max_twos, std::move(tail), std::move(p)};
}

SupportCase classify(const Word& w, const Word& tail)
{
    if (leq(w, tail)) return {SupportKind::q_ratio, 0};
    if (w.length() > tail.length() && w.has_suffix(tail)) {
        const std::size_t ones = w.length() - tail.length();
        if (w.digits().find('2') >= ones) return {SupportKind::ones_prefix, ones};
    }
    return {SupportKind::zero, 0};
}

SupportCase classify(const Word& w, const MeasureParams& params)
{
    return classify(w, params.tail);
}

// ---------------------------------------------------------------------------

CentralMeasure::CentralMeasure(MeasureParams params) : params_(std::move(params))
{
    q_root_value_ = q_table_.q_eps(params_.tail).eval(params_.p);
}

BigInt CentralMeasure::paths_from_root(const Word& w, std::size_t n)
{
    return counter_.count(Word(), w, n);
}

BigRat CentralMeasure::mu_formula(const Word& w, std::size_t level)
{
    if (w.twos() > params_.max_twos)
        throw std::invalid_argument("word " + w.str() + " has more than K = " +
                                    std::to_string(params_.max_twos) + " twos");
    if (level == 0) return w.empty() ? 1 : 0;

    const SupportCase c = classify(w, params_.tail);
    if (c.kind == SupportKind::zero) return 0;

    const BigRat& p = params_.p;
    const BigRat q = 1 - p;
    BigRat pl, qr;
    mpz_class num, den;
    // p^l (1-p)^|w| without repeated rational normalization
    mpz_pow_ui(num.get_mpz_t(), p.get_num_mpz_t(), level);
    mpz_pow_ui(den.get_mpz_t(), p.get_den_mpz_t(), level);
    pl = BigRat(num, den);
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), w.rank());
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), w.rank());
    qr = BigRat(num, den);

    BigRat ratio = (c.kind == SupportKind::q_ratio) ? q_table_.q_gen(w, params_.tail).eval(p)
                                                    : BigRat(1);
    ratio /= q_root_value_;

    BigRat out = BigRat(paths_from_root(w, level)) * pl * qr * ratio;
    out.canonicalize();
    return out;
}

BigRat CentralMeasure::mu(const Word& w, std::size_t level)
{
    auto key = std::make_pair(w, level);
    if (auto it = mu_cache_.find(key); it != mu_cache_.end()) return it->second;

    BigRat value;
    if (params_.p == 1) {
        if (w.twos() > params_.max_twos)
            throw std::invalid_argument("word " + w.str() + " has more than K = " +
                                        std::to_string(params_.max_twos) + " twos");
        value = w.empty() ? 1 : 0;
    } else {
        value = mu_formula(w, level);
    }
    mu_cache_.emplace(std::move(key), value);
    return value;
}

std::vector<Word> CentralMeasure::support(std::size_t max_len) const
{
    const Word& tail = params_.tail;
    std::vector<Word> out;
    for (const Word& u : ancestors(tail))
        if (u.length() <= max_len) out.push_back(u);
    for (std::size_t len = tail.length() + 1; len <= max_len; ++len)
        out.push_back(Word::ones(len - tail.length()).concat(tail));
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.length() != b.length() ? a.length() < b.length() : a < b;
    });
    return out;
}

BigRat CentralMeasure::level_mass(std::size_t level, std::size_t max_len)
{
    if (level == 0) throw std::invalid_argument("level_mass requires level >= 1");
    BigRat total = 0;
    for (const Word& w : support(max_len)) total += mu(w, level);
    total.canonicalize();
    return total;
}

BigRat CentralMeasure::backward_sum(const Word& w, std::size_t level, std::size_t max_len)
{
    const BigInt below = paths_from_root(w, level);
    BigRat total = 0;
    for (const Word& u : support(max_len)) {
        if (!leq(w, u)) continue;
        BigRat term = mu(u, level + 1);
        if (term == 0) continue;
        term *= BigRat(below, paths_from_root(u, level + 1));
        total += term;
    }
    total.canonicalize();
    return total;
}

// ---------------------------------------------------------------------------

BigRat prelimit_mu(ClosedFormCounter& counter, const Word& v_m, std::size_t n_m, const Word& w,
                   std::size_t l)
{
    if (n_m <= l)
        throw std::invalid_argument("prelimit_mu requires n_m > l (n_m = " + std::to_string(n_m) +
                                    ", l = " + std::to_string(l) + ")");
    const BigInt numerator = counter.count(Word(), w, l) * counter.count(w, v_m, n_m - l);
    if (numerator == 0) return 0;
    BigRat out(numerator, counter.count(Word(), v_m, n_m));
    out.canonicalize();
    return out;
}

BigRat prelimit_mu(const Word& v_m, std::size_t n_m, const Word& w, std::size_t l)
{
    ClosedFormCounter counter;
    return prelimit_mu(counter, v_m, n_m, w, l);
}

PrelimitVertex schedule(const MeasureParams& params, std::size_t m, const Word& prefix)
{
    if (params.p >= 1) throw std::invalid_argument("schedule requires p < 1");
    Word v = prefix.concat(Word::ones(m)).concat(params.tail);
    if (v.twos() > params.max_twos)
        throw std::invalid_argument("schedule word " + v.str() + " leaves YF^K (K = " +
                                    std::to_string(params.max_twos) + ")");
    const BigRat odds = params.p / (1 - params.p);
    const BigInt n = ceil(odds * BigRat(static_cast<unsigned long>(v.length())));
    const std::size_t steps = std::max<std::size_t>(1, n.get_ui());
    return {std::move(v), steps};
}

std::vector<ConvergenceRow> convergence_table(const MeasureParams& params, const Word& w,
                                              std::size_t l, std::span<const std::size_t> m_list,
                                              const Word& prefix)
{
    CentralMeasure measure(params);
    const BigRat limit = measure.mu(w, l);
    ClosedFormCounter counter;
    std::vector<ConvergenceRow> rows;
    for (std::size_t m : m_list) {
        const PrelimitVertex vertex = schedule(params, m, prefix);
        BigRat value = prelimit_mu(counter, vertex.word, vertex.steps, w, l);
        BigRat err = abs(value - limit);
        err.canonicalize();
        rows.push_back({m, vertex.steps, std::move(value), std::move(err)});
    }
    return rows;
}

// ---------------------------------------------------------------------------

namespace {

// 53 random bits -> [0, 1); independent of the standard library's
// distribution implementations.
double unit_interval(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

PathSampler::PathSampler(MeasureParams params, BigRat tol, std::size_t max_len)
    : measure_(std::move(params)), tol_(std::move(tol)), max_len_(max_len)
{
    if (measure_.params().p >= 1) throw std::invalid_argument("sampler requires p < 1");
    if (tol_ <= 0 || tol_ >= 1) throw std::invalid_argument("tolerance must lie in (0, 1)");
}

const PathSampler::Transition& PathSampler::transition(const Word& from, std::size_t level)
{
    auto key = std::make_pair(from, level);
    if (auto it = transitions_.find(key); it != transitions_.end()) return it->second;

    const BigRat from_mass = measure_.mu(from, level);
    if (from_mass == 0)
        throw std::logic_error("sampler reached " + from.str() + " at level " +
                               std::to_string(level) + ", which has measure zero");
    const BigRat scale = BigRat(measure_.paths_from_root(from, level)) / from_mass;
    const BigRat target = 1 - tol_;

    std::vector<Word> targets;
    std::vector<BigRat> weights;
    BigRat cumulative = 0;
    // support() is ordered by length, which is the enumeration order we need.
    for (const Word& u : measure_.support(max_len_)) {
        if (!leq(from, u)) continue;
        BigRat weight = measure_.mu(u, level + 1);
        if (weight == 0) continue;
        weight *= scale / BigRat(measure_.paths_from_root(u, level + 1));
        weight.canonicalize();
        cumulative += weight;
        targets.push_back(u);
        weights.push_back(std::move(weight));
        if (cumulative >= target) break;
    }
    if (cumulative < target)
        throw std::runtime_error("cotransition weights from " + from.str() + " at level " +
                                 std::to_string(level) + " reach only " + format_float(cumulative) +
                                 " within length " + std::to_string(max_len_));

    Transition t;
    t.targets = std::move(targets);
    BigRat running = 0;
    for (const BigRat& w : weights) {
        running += w;
        t.cdf.push_back(to_double(running / cumulative));
    }
    t.cdf.back() = 1.0;
    return transitions_.emplace(std::move(key), std::move(t)).first->second;
}

std::vector<Word> PathSampler::sample(std::size_t levels, std::mt19937_64& rng)
{
    std::vector<Word> path{Word()};
    for (std::size_t l = 0; l < levels; ++l) {
        const Transition& t = transition(path.back(), l);
        const double u = unit_interval(rng);
        auto it = std::upper_bound(t.cdf.begin(), t.cdf.end(), u);
        const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - t.cdf.begin()),
                                                      t.targets.size() - 1);
        path.push_back(t.targets[idx]);
    }
    return path;
}

std::vector<Word> PathSampler::sample(std::size_t levels, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return sample(levels, rng);
}

} // namespace yf
