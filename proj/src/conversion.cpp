#include "stratexp/conversion.hpp"

#include <stdexcept>
#include <string>

#include "stratexp/errors.hpp"

namespace stratexp {

void ItoCombination::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

ItoCombination appended_to_all(const ItoCombination& c, Word::Letter m,
                               const Rational& scale) {
    ItoCombination out;
    for (const auto& [word, coeff] : c.terms())
        out.add_term(word.appended(m), coeff * scale);
    return out;
}

bool all_zero(const Word& w) { return nonzero_count(w) == 0; }

}  // namespace

ItoCombination strat_to_ito(const Word& alpha, const DecompositionLimits& limits) {
    if (alpha.size() > limits.max_word_len)
        throw cap_error("strat_to_ito: word length " + std::to_string(alpha.size()) +
                        " exceeds the cap of " + std::to_string(limits.max_word_len));

    // Expand prefix by prefix; only the last two expansions are ever needed.
    ItoCombination two_back;  // unused until k == 2
    ItoCombination one_back;
    one_back.add_term(Word{}, Rational(1));

    for (std::size_t k = 1; k <= alpha.size(); ++k) {
        Word::Letter letter = alpha[k - 1];
        ItoCombination current = appended_to_all(one_back, letter, Rational(1));
        if (k >= 2 && letter != 0 && alpha[k - 2] == letter) {
            for (const auto& [word, coeff] : two_back.terms())
                current.add_term(word.appended(0), coeff / 2);
        }
        if (current.size() > limits.max_terms)
            throw cap_error("strat_to_ito: expansion exceeds " +
                            std::to_string(limits.max_terms) + " terms");
        two_back = std::move(one_back);
        one_back = std::move(current);
    }

    combination_p_q(one_back);  // asserts the single-all-zero-key structure
    return one_back;
}

std::optional<std::pair<Rational, std::size_t>> combination_p_q(
    const ItoCombination& c) {
    std::optional<std::pair<Rational, std::size_t>> found;
    for (const auto& [word, coeff] : c.terms()) {
        if (!all_zero(word)) continue;
        if (found)
            throw std::logic_error("ItoCombination: two all-zero words present");
        found = {coeff, word.size()};
    }
    return found;
}

Monomial expect_ito(const Word& beta) {
    if (nonzero_count(beta) > 0) return Monomial{};
    unsigned len = static_cast<unsigned>(beta.size());
    return Monomial(Rational(1, factorial(len)), len);
}

Monomial expect_combination(const ItoCombination& c) {
    Monomial out;
    for (const auto& [word, coeff] : c.terms()) {
        Monomial term = expect_ito(word);
        if (term.is_zero()) continue;
        if (!out.is_zero())
            throw std::logic_error(
                "expect_combination: two terms with nonzero expectation");
        out = Monomial(coeff * term.coeff(), term.power());
    }
    return out;
}

}  // namespace stratexp
