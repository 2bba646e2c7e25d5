#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "yf/measures.hpp"

using namespace yf;
using oracle::rat;

namespace {

Word W(const char* s) { return Word::parse(s); }

MeasureParams params(std::size_t k, const char* tail, long num, long den)
{
    return MeasureParams::make(k, W(tail), rat(num, den));
}

BigRat power(const BigRat& x, std::size_t e)
{
    BigRat r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= x;
    return r;
}

std::vector<Word> words_up_to_length(std::size_t len, std::size_t max_twos)
{
    std::vector<Word> out;
    for (const Word& w : oracle::all_words_up_to_rank(2 * len))
        if (w.length() <= len && w.twos() <= max_twos) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW(params(1, "2", 1, 2));
    CHECK_NOTHROW(params(0, "e", 1, 1));
    CHECK_THROWS_AS(params(1, "2", 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(params(1, "2", 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(params(1, "2", -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(params(2, "12", 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(params(0, "2", 1, 2), std::invalid_argument);
}

TEST_CASE("classify")
{
    CHECK(classify(W("e"), W("2")) == SupportCase{SupportKind::q_ratio, 0});
    CHECK(classify(W("12"), W("2")) == SupportCase{SupportKind::ones_prefix, 1});
    CHECK(classify(W("21"), W("2")) == SupportCase{SupportKind::zero, 0});
    CHECK(classify(W("1112"), W("2")) == SupportCase{SupportKind::ones_prefix, 3});
    CHECK(classify(W("111"), W("e")) == SupportCase{SupportKind::ones_prefix, 3});
    CHECK(classify(W("1"), W("21")) == SupportCase{SupportKind::q_ratio, 0});

    // the two positive cases never overlap
    for (const Word& tail : {W("e"), W("2"), W("21"), W("211"), W("2121")})
        for (const Word& w : words_up_to_length(6, 2)) {
            const SupportCase c = classify(w, tail);
            if (c.kind == SupportKind::ones_prefix) CHECK_FALSE(leq(w, tail));
        }
}

TEST_CASE("support")
{
    auto as_strings = [](const std::vector<Word>& ws) {
        std::vector<std::string> s;
        for (const Word& w : ws) s.push_back(w.str());
        return s;
    };
    CHECK(as_strings(CentralMeasure(params(1, "2", 1, 2)).support(3)) ==
          std::vector<std::string>{"e", "1", "2", "12", "112"});
    CHECK(as_strings(CentralMeasure(params(0, "e", 1, 2)).support(2)) ==
          std::vector<std::string>{"e", "1", "11"});
    CHECK(as_strings(CentralMeasure(params(1, "21", 1, 2)).support(2)) ==
          std::vector<std::string>{"e", "1", "2", "11", "21"});

    // brute-force filter over all short words
    for (const char* tail : {"e", "2", "21", "211"}) {
        const MeasureParams ps = params(W(tail).twos(), tail, 1, 2);
        std::vector<Word> want;
        for (const Word& w : words_up_to_length(7, ps.max_twos))
            if (classify(w, ps).kind != SupportKind::zero) want.push_back(w);
        std::sort(want.begin(), want.end(), [](const Word& a, const Word& b) {
            return a.length() != b.length() ? a.length() < b.length() : a < b;
        });
        CHECK(CentralMeasure(ps).support(7) == want);
    }
}

TEST_CASE("level-one closed forms for tail 2")
{
    for (auto [num, den] : {std::pair{1L, 4L}, {1L, 2L}, {3L, 4L}, {2L, 3L}}) {
        const BigRat p = rat(num, den), q = 1 - p;
        CentralMeasure m(MeasureParams::make(1, W("2"), p));
        CHECK(m.mu(W("e"), 1) == p);
        CHECK(m.mu(W("1"), 1) == p * q);
        CHECK(m.mu(W("2"), 1) == p * q * q);
        std::string ones;
        for (std::size_t k = 1; k <= 6; ++k) {
            ones += '1';
            CHECK(m.mu(Word::from_digits(ones + "2"), 1) == p * power(q, k + 2));
        }
        CHECK(m.mu(W("21"), 1) == 0);
        CHECK(m.mu(W("11"), 1) == 0);
    }
}

TEST_CASE("all-ones measure")
{
    CentralMeasure m(params(0, "e", 1, 2));
    for (unsigned long len = 0; len <= 6; ++len)
        for (unsigned long l = 1; l <= 4; ++l) {
            const BigInt paths = binom(len + l - 1, len);
            BigRat want(paths, BigInt(1) << (l + len));
            want.canonicalize();
            CHECK(m.mu(Word::ones(len), l) == want);
        }
    CHECK(m.level_mass(1, 40) >= rat(999999, 1000000));
}

TEST_CASE("level zero and p = 1")
{
    CentralMeasure m(params(1, "2", 1, 3));
    CHECK(m.mu(W("e"), 0) == 1);
    CHECK(m.mu(W("1"), 0) == 0);
    CHECK_THROWS_AS(m.mu(W("22"), 1), std::invalid_argument);

    CentralMeasure one(params(2, "21", 1, 1));
    for (std::size_t l = 0; l <= 4; ++l) {
        CHECK(one.mu(W("e"), l) == 1);
        for (const Word& w : words_up_to_length(3, 2)) {
            if (w.empty()) continue;
            CHECK(one.mu(w, l) == 0);
            CHECK(one.mu_formula(w, l) == 0);
        }
    }
}

TEST_CASE("nonnegativity and formula agreement")
{
    for (const char* tail : {"e", "2", "21", "211"})
        for (auto [num, den] : {std::pair{1L, 4L}, {1L, 2L}, {3L, 4L}}) {
            CentralMeasure m(params(W(tail).twos(), tail, num, den));
            for (const Word& w : words_up_to_length(4, W(tail).twos()))
                for (std::size_t l = 1; l <= 3; ++l) {
                    CHECK(m.mu(w, l) >= 0);
                    CHECK(m.mu(w, l) == m.mu_formula(w, l));
                }
        }
}

TEST_CASE("level mass")
{
    CentralMeasure m(params(1, "2", 1, 2));
    const BigRat mass = m.level_mass(1, 40);
    CHECK(mass <= 1);
    CHECK(mass >= rat(999999, 1000000));
    CHECK(m.level_mass(2, 0) == m.mu(W("e"), 2));
    CHECK_THROWS_AS(m.level_mass(0, 5), std::invalid_argument);

    BigRat prev = 0;
    for (std::size_t n = 0; n <= 20; ++n) {
        const BigRat cur = m.level_mass(2, n);
        CHECK(cur >= prev);
        CHECK(cur <= 1);
        prev = cur;
    }
}

TEST_CASE("backward sums approach mu from below")
{
    CentralMeasure m(params(1, "21", 1, 2));
    for (const Word& w : m.support(3))
        for (std::size_t l = 1; l <= 2; ++l) {
            const BigRat target = m.mu(w, l);
            const BigRat coarse = m.backward_sum(w, l, 20);
            const BigRat fine = m.backward_sum(w, l, 50);
            CHECK(coarse <= fine);
            CHECK(fine <= target);
            CHECK(to_double(target - fine) < 1e-6);
        }
}

TEST_CASE("schedule")
{
    CHECK(schedule(params(1, "2", 1, 2), 5) == PrelimitVertex{W("111112"), 6});
    CHECK(schedule(params(0, "e", 3, 4), 4) == PrelimitVertex{W("1111"), 12});
    CHECK(schedule(params(1, "2", 1, 2), 0) == PrelimitVertex{W("2"), 1});
    CHECK(schedule(params(0, "e", 1, 2), 0) == PrelimitVertex{W("e"), 1});
    CHECK(schedule(params(2, "2", 1, 2), 3, W("2")) == PrelimitVertex{W("21112"), 5});
    CHECK_THROWS(schedule(params(1, "2", 1, 1), 3));
    CHECK_THROWS(schedule(params(1, "2", 1, 2), 3, W("2")));
}

TEST_CASE("prelimit values")
{
    ClosedFormCounter c;
    for (std::size_t l = 0; l <= 3; ++l) CHECK(prelimit_mu(c, W("21121"), 12, W("e"), l) <= 1);
    CHECK(prelimit_mu(c, W("21121"), 12, W("e"), 2) < 1);
    CHECK(prelimit_mu(c, W("1112"), 9, W("21"), 2) == 0);
    CHECK_THROWS(prelimit_mu(c, W("2"), 2, W("e"), 2));
    CHECK(prelimit_mu(W("212"), 10000, W("e"), 3) >= rat(99, 100));

    // direct ratio of brute-force counts
    oracle::BruteJumpPaths brute(5);
    BigRat want(brute.count(Word(), W("1"), 2) * brute.count(W("1"), W("212"), 3),
                brute.count(Word(), W("212"), 5));
    want.canonicalize();
    CHECK(prelimit_mu(W("212"), 5, W("1"), 2) == want);
}

TEST_CASE("convergence along the schedule")
{
    const MeasureParams ps = params(1, "2", 1, 2);
    const std::vector<std::size_t> ms{10, 50, 200};

    const auto rows = convergence_table(ps, W("1"), 1, ms);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].abs_error < rows[0].abs_error);
    CHECK(rows[2].abs_error < rows[1].abs_error);
    CHECK(to_double(rows[2].abs_error) < 0.05);
    CHECK(rows[2].m == 200);
    CHECK(rows[2].n_m == 201);

    for (const auto& r : convergence_table(ps, W("21"), 2, ms)) CHECK(r.value == 0);
    for (const auto& r : convergence_table(ps, W("e"), 0, ms)) CHECK(r.value == 1);
}

TEST_CASE("convergence with a fixed prefix in front of the ones run")
{
    const MeasureParams ps = params(2, "2", 1, 2);
    const std::vector<std::size_t> ms{50, 200};
    CentralMeasure m(ps);
    for (const char* w : {"e", "1", "2", "12", "112"})
        for (std::size_t l = 1; l <= 3; ++l) {
            const auto rows = convergence_table(ps, W(w), l, ms, W("2"));
            CHECK(to_double(rows[1].abs_error) < 0.01);
            if (rows[0].abs_error != 0) CHECK(rows[1].abs_error < rows[0].abs_error);
        }
}

TEST_CASE("distinct parameters give distinct measures")
{
    std::vector<std::map<std::pair<std::string, std::size_t>, BigRat>> prints;
    for (const char* tail : {"e", "2", "21", "211"})
        for (auto [num, den] : {std::pair{1L, 4L}, {1L, 2L}, {3L, 4L}}) {
            CentralMeasure m(params(W(tail).twos(), tail, num, den));
            std::map<std::pair<std::string, std::size_t>, BigRat> fp;
            for (const Word& w : words_up_to_length(3, W(tail).twos()))
                for (std::size_t l = 0; l <= 3; ++l) fp[{w.str(), l}] = m.mu(w, l);
            prints.push_back(std::move(fp));
        }
    for (std::size_t i = 0; i < prints.size(); ++i)
        for (std::size_t j = i + 1; j < prints.size(); ++j) CHECK(prints[i] != prints[j]);
}

TEST_CASE("sampler")
{
    PathSampler a(params(1, "2", 1, 2), rat(1, 1000000));
    PathSampler b(params(1, "2", 1, 2), rat(1, 1000000));
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        const auto pa = a.sample(6, seed);
        CHECK(pa == b.sample(6, seed));
        REQUIRE(pa.size() == 7);
        CHECK(pa.front().empty());
        for (std::size_t i = 1; i < pa.size(); ++i) {
            CHECK(leq(pa[i - 1], pa[i]));
            CHECK(pa[i].twos() <= 1);
            CHECK(classify(pa[i], W("2")).kind != SupportKind::zero);
        }
    }
    CHECK_THROWS(PathSampler(params(1, "2", 1, 1), rat(1, 100)));
    CHECK_THROWS(PathSampler(params(1, "2", 1, 2), rat(0)));
    CHECK_THROWS(PathSampler(params(1, "2", 1, 2), rat(1)));

    PathSampler tight(params(1, "2", 1, 10), rat(1, 1000000000), 3);
    CHECK_THROWS_AS(tight.sample(2, 5), std::runtime_error);
}

TEST_CASE("sampler dwells at the root with probability p")
{
    PathSampler s(params(0, "e", 9, 10), rat(1, 1000000));
    std::mt19937_64 rng(2024);
    std::size_t stays = 0, trials = 0;
    for (int i = 0; i < 4000; ++i) {
        const auto path = s.sample(1, rng);
        ++trials;
        if (path[1].empty()) ++stays;
    }
    const double freq = static_cast<double>(stays) / static_cast<double>(trials);
    CHECK(freq == doctest::Approx(0.9).epsilon(0.02));
}
