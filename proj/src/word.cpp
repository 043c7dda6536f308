#include "stratexp/word.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>

#include "stratexp/errors.hpp"

namespace stratexp {

Word Word::dropped_last(std::size_t n) const {
    if (n >= letters_.size()) return Word{};
    return Word(std::vector<Letter>(letters_.begin(), letters_.end() - n));
}

Word Word::appended(Letter m) const {
    std::vector<Letter> out = letters_;
    out.push_back(m);
    return Word(std::move(out));
}

Word Word::reversed() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    return Word(std::move(out));
}

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Word parse_word(const std::string& text) {
    std::string_view rest = trimmed(text);
    if (rest.empty()) return Word{};

    std::vector<Word::Letter> letters;
    std::size_t index = 0;
    while (true) {
        std::size_t comma = rest.find(',');
        std::string_view token = trimmed(rest.substr(0, comma));
        Word::Letter value = 0;
        auto [end, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw parse_error("word: bad letter '" + std::string(token) +
                              "' at position " + std::to_string(index) +
                              " (expected a nonnegative integer)");
        letters.push_back(value);
        ++index;
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return Word(std::move(letters));
}

std::string render_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::size_t zero_count(const Word& w) {
    return static_cast<std::size_t>(
        std::count(w.begin(), w.end(), Word::Letter{0}));
}

std::size_t nonzero_count(const Word& w) { return w.size() - zero_count(w); }

bool is_zero_pair_word(const Word& w) {
    // Right-to-left scan; a nonzero letter can only be consumed as half of
    // an equal pair, so the greedy choice is forced at every position.
    std::size_t i = w.size();
    while (i > 0) {
        if (w[i - 1] == 0) {
            i -= 1;
        } else if (i >= 2 && w[i - 2] == w[i - 1]) {
            i -= 2;
        } else {
            return false;
        }
    }
    return true;
}

namespace {

// a(l) = a(l-1) + k * a(l-2), capped; returns the total count over lengths
// 0..max_len or word_cap + 1 if that total would exceed word_cap.
std::size_t capped_count(std::size_t max_len, Word::Letter k,
                         std::size_t word_cap) {
    std::size_t total = 0;
    std::size_t prev2 = 1, prev1 = 1;  // a(0), a(1)
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::size_t here;
        if (len == 0) {
            here = 1;
        } else if (len == 1) {
            here = 1;
        } else {
            // Overflow-safe: values are monotone, so clamp once past the cap.
            if (prev2 > word_cap / static_cast<std::size_t>(k) ||
                prev1 > word_cap - static_cast<std::size_t>(k) * prev2)
                return word_cap + 1;
            here = prev1 + static_cast<std::size_t>(k) * prev2;
            prev2 = prev1;
            prev1 = here;
        }
        if (here > word_cap - total) return word_cap + 1;
        total += here;
    }
    return total;
}

void emit_blocks(std::vector<Word::Letter>& prefix, std::size_t remaining,
                 Word::Letter num_wiener, std::vector<Word>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    // Block choices in lexicographic order of their first letter: a single
    // 0, then the pair mm for each Wiener driver m.
    prefix.push_back(0);
    emit_blocks(prefix, remaining - 1, num_wiener, out);
    prefix.pop_back();
    if (remaining >= 2) {
        for (Word::Letter m = 1; m <= num_wiener; ++m) {
            prefix.push_back(m);
            prefix.push_back(m);
            emit_blocks(prefix, remaining - 2, num_wiener, out);
            prefix.pop_back();
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> enumerate_nonzero_words(std::size_t max_len,
                                          Word::Letter num_wiener,
                                          std::size_t length_cap,
                                          std::size_t word_cap) {
    if (num_wiener < 1)
        throw std::invalid_argument("enumerate_nonzero_words: num_wiener must be >= 1");
    if (max_len > length_cap)
        throw cap_error("enumerate_nonzero_words: max_len " +
                        std::to_string(max_len) + " exceeds the cap of " +
                        std::to_string(length_cap));
    std::size_t count = capped_count(max_len, num_wiener, word_cap);
    if (count > word_cap)
        throw cap_error("enumerate_nonzero_words: more than " +
                        std::to_string(word_cap) + " words requested");

    std::vector<Word> out;
    out.reserve(count);
    std::vector<Word::Letter> prefix;
    for (std::size_t len = 0; len <= max_len; ++len)
        emit_blocks(prefix, len, num_wiener, out);
    return out;
}

}  // namespace stratexp
