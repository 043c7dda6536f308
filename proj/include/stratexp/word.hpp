#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace stratexp {

/// A multi-index over integration drivers.
///
/// Letter 0 names the time driver (dW^0 = dt); letters >= 1 name independent
/// Wiener processes. The empty word is allowed and stands for the constant
/// integral 1. Words order by length first, then lexicographically.
class Word {
public:
    using Letter = std::uint64_t;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    /// Copy with the last n letters removed; n past the length gives the
    /// empty word.
    Word dropped_last(std::size_t n = 1) const;
    /// Copy with one letter appended.
    Word appended(Letter m) const;
    Word reversed() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() <=> b.letters_.size();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

/// Parse a comma-separated list of nonnegative integers; the empty string
/// gives the empty word. Throws parse_error naming the offending token.
Word parse_word(const std::string& text);

/// Inverse of parse_word: "0,1,1"; empty word renders as "".
std::string render_word(const Word& w);

std::size_t zero_count(const Word& w);
std::size_t nonzero_count(const Word& w);

/// True iff w splits left to right into blocks that are either a single 0
/// or two equal nonzero letters mm. Exactly these words have nonzero
/// expectation. The empty word qualifies.
bool is_zero_pair_word(const Word& w);

inline constexpr std::size_t kDefaultEnumerationLengthCap = 20;
inline constexpr std::size_t kDefaultEnumerationWordCap = 1'000'000;

/// All words of length <= max_len over drivers {0, 1, ..., num_wiener} that
/// satisfy is_zero_pair_word, in length-then-lexicographic order. The count
/// at fixed length l follows a(l) = a(l-1) + num_wiener * a(l-2) with
/// a(0) = a(1) = 1. Throws cap_error when max_len exceeds length_cap or the
/// result would exceed word_cap entries.
std::vector<Word> enumerate_nonzero_words(
    std::size_t max_len, Word::Letter num_wiener,
    std::size_t length_cap = kDefaultEnumerationLengthCap,
    std::size_t word_cap = kDefaultEnumerationWordCap);

}  // namespace stratexp
