#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace yf {

/// A vertex of the Young–Fibonacci lattice: a finite word over {1, 2}.
///
/// Digits are stored as the characters '1' and '2'; the empty word is the
/// root. The text form is the digit string, with "e" standing for the empty
/// word. Comparison is lexicographic on the digit string.
class Word {
public:
    Word() = default;

    /// Parses "e" or a nonempty string of '1'/'2'. Throws std::invalid_argument.
    static Word parse(std::string_view text);
    /// Builds a word from raw digits (no "e" shorthand); validates them.
    static Word from_digits(std::string_view digits);
    static Word ones(std::size_t count);

    const std::string& digits() const noexcept { return digits_; }
    std::string str() const { return digits_.empty() ? std::string("e") : digits_; }

    bool empty() const noexcept { return digits_.empty(); }
    std::size_t length() const noexcept { return digits_.size(); }
    std::size_t rank() const noexcept { return length() + twos(); }
    std::size_t twos() const noexcept;

    char front() const { return digits_.front(); }
    char operator[](std::size_t i) const { return digits_[i]; }

    /// Word without its first digit. Requires a nonempty word.
    Word tail() const { return Word(digits_.substr(1)); }
    /// Word with `digit` prepended.
    Word prepend(char digit) const { return Word(std::string(1, digit) + digits_); }
    Word concat(const Word& suffix) const { return Word(digits_ + suffix.digits_); }

    bool has_suffix(const Word& suffix) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

private:
    explicit Word(std::string digits) : digits_(std::move(digits)) {}

    std::string digits_;
};

struct WordStats {
    std::size_t rank;
    std::size_t length;
    std::size_t twos;

    friend bool operator==(const WordStats&, const WordStats&) = default;
};

WordStats stats(const Word& v);

/// Words covering `v` in the Hasse diagram: replace the leftmost 1 by a 2,
/// or insert a 1 anywhere left of the leftmost 1 (anywhere at all when
/// there is no 1). Sorted.
std::vector<Word> covers_up(const Word& v);

/// Words covered by `v`; u is in the result iff v is in covers_up(u). Sorted.
std::vector<Word> covers_down(const Word& v);

/// The pair (w_v, v_w) left after removing the maximal common suffix.
struct StrippedPair {
    Word left;
    Word right;
};

StrippedPair strip_common_suffix(const Word& w, const Word& v);

/// Lattice order: w <= v iff twos(v_w) >= length(w_v).
bool leq(const Word& w, const Word& v);

/// twos(v_w) == length(w_v): w <= v joined by exactly one saturated chain.
bool single_chain(const Word& w, const Word& v);

/// Down-set r(v) = { u : u <= v }, built by the prefix recursion
/// r(1v) = r(v) + {1v},  r(2v) = {e} + 1.r(v) + 2.r(v). Sorted.
std::vector<Word> ancestors(const Word& v);

/// All words of rank n with at most `max_twos` twos, in lexicographic order.
/// std::nullopt means no bound on the number of twos.
std::vector<Word> words_of_rank(std::size_t n, std::optional<std::size_t> max_twos = std::nullopt);

/// Calls `fn` for each word of rank n (same order as words_of_rank) without
/// materializing the list.
void for_each_word_of_rank(std::size_t n, std::optional<std::size_t> max_twos,
                           const std::function<void(const Word&)>& fn);

/// Measure tails are e, or words starting with 2 with at most K twos.
bool is_valid_tail(const Word& v, std::size_t max_twos);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept
    {
        return std::hash<std::string>{}(w.digits());
    }
};

struct WordPairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept
    {
        std::size_t h = std::hash<std::string>{}(p.first.digits());
        return h ^ (std::hash<std::string>{}(p.second.digits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

} // namespace yf
