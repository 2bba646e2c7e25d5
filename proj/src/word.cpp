#include "yf/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace yf {

Word Word::from_digits(std::string_view digits)
{
    for (char c : digits)
        if (c != '1' && c != '2')
            throw std::invalid_argument("invalid digit '" + std::string(1, c) + "' in word '" +
                                        std::string(digits) + "'");
    return Word(std::string(digits));
}

Word Word::parse(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty word text (use \"e\" for the empty word)");
    if (text == "e") return Word();
    return from_digits(text);
}

Word Word::ones(std::size_t count)
{
    return Word(std::string(count, '1'));
}

std::size_t Word::twos() const noexcept
{
    return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), '2'));
}

bool Word::has_suffix(const Word& suffix) const
{
    return digits_.size() >= suffix.digits_.size() &&
           std::equal(suffix.digits_.rbegin(), suffix.digits_.rend(), digits_.rbegin());
}

WordStats stats(const Word& v)
{
    return {v.rank(), v.length(), v.twos()};
}

std::vector<Word> covers_up(const Word& v)
{
    const std::string& d = v.digits();
    const auto first_one = d.find('1');
    const std::size_t insert_limit = first_one == std::string::npos ? d.size() : first_one;

    std::vector<Word> out;
    out.reserve(insert_limit + 2);
    if (first_one != std::string::npos) {
        std::string s = d;
        s[first_one] = '2';
        out.push_back(Word::from_digits(s));
    }
    for (std::size_t pos = 0; pos <= insert_limit; ++pos) {
        std::string s = d;
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), '1');
        out.push_back(Word::from_digits(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> covers_down(const Word& v)
{
    // Any lower cover differs by deleting a 1 or turning a 2 into a 1;
    // keep the candidates whose up-covers really contain v.
    const std::string& d = v.digits();
    std::vector<Word> candidates;
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::string s = d;
        if (d[i] == '1')
            s.erase(i, 1);
        else
            s[i] = '1';
        candidates.push_back(Word::from_digits(s));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Word> out;
    for (const Word& u : candidates) {
        auto ups = covers_up(u);
        if (std::binary_search(ups.begin(), ups.end(), v)) out.push_back(u);
    }
    return out;
}

StrippedPair strip_common_suffix(const Word& w, const Word& v)
{
    const std::string& a = w.digits();
    const std::string& b = v.digits();
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
    return {Word::from_digits(std::string_view(a).substr(0, a.size() - k)),
            Word::from_digits(std::string_view(b).substr(0, b.size() - k))};
}

bool leq(const Word& w, const Word& v)
{
    auto [left, right] = strip_common_suffix(w, v);
    return right.twos() >= left.length();
}

bool single_chain(const Word& w, const Word& v)
{
    auto [left, right] = strip_common_suffix(w, v);
    return right.twos() == left.length();
}

namespace {

const std::vector<Word>& ancestors_cached(const Word& v,
                                         std::unordered_map<Word, std::vector<Word>, WordHash>& memo)
{
    if (auto it = memo.find(v); it != memo.end()) return it->second;

    std::vector<Word> out;
    if (v.empty()) {
        out.push_back(Word());
    } else {
        const auto& below = ancestors_cached(v.tail(), memo);
        if (v.front() == '1') {
            out = below;
            out.push_back(v);
        } else {
            out.reserve(2 * below.size() + 1);
            out.push_back(Word());
            for (const Word& u : below) {
                out.push_back(u.prepend('1'));
                out.push_back(u.prepend('2'));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return memo.emplace(v, std::move(out)).first->second;
}

void words_rec(std::string& prefix, std::size_t remaining, std::size_t twos_left, bool bounded,
               const std::function<void(const Word&)>& fn)
{
    if (remaining == 0) {
        fn(Word::from_digits(prefix));
        return;
    }
    prefix.push_back('1');
    words_rec(prefix, remaining - 1, twos_left, bounded, fn);
    prefix.pop_back();
    if (remaining >= 2 && (!bounded || twos_left > 0)) {
        prefix.push_back('2');
        words_rec(prefix, remaining - 2, bounded ? twos_left - 1 : 0, bounded, fn);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Word> ancestors(const Word& v)
{
    std::unordered_map<Word, std::vector<Word>, WordHash> memo;
    return ancestors_cached(v, memo);
}

void for_each_word_of_rank(std::size_t n, std::optional<std::size_t> max_twos,
                           const std::function<void(const Word&)>& fn)
{
    std::string prefix;
    words_rec(prefix, n, max_twos.value_or(0), max_twos.has_value(), fn);
}

std::vector<Word> words_of_rank(std::size_t n, std::optional<std::size_t> max_twos)
{
    std::vector<Word> out;
    for_each_word_of_rank(n, max_twos, [&](const Word& w) { out.push_back(w); });
    return out;
}

bool is_valid_tail(const Word& v, std::size_t max_twos)
{
    return v.empty() || (v.front() == '2' && v.twos() <= max_twos);
}

} // namespace yf
