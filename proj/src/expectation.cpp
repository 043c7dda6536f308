#include "stratexp/expectation.hpp"

#include <stdexcept>

namespace stratexp {

ExpectResult expect_strat(const Word& alpha) {
    std::size_t halvings = 0;
    std::size_t q = 0;
    std::size_t i = alpha.size();
    while (i > 0) {
        if (alpha[i - 1] == 0) {
            q += 1;
            i -= 1;
        } else if (i >= 2 && alpha[i - 2] == alpha[i - 1]) {
            halvings += 1;
            q += 1;
            i -= 2;
        } else {
            return ExpectResult{};
        }
    }
    Rational coeff = rational_pow(Rational(1, 2), static_cast<unsigned>(halvings)) /
                     factorial(static_cast<unsigned>(q));
    return ExpectResult{Monomial(std::move(coeff), static_cast<unsigned>(q)),
                        halvings, q, true};
}

Rational expect_strat_at(const Word& alpha, const Rational& t) {
    if (t < 0)
        throw std::domain_error("expect_strat_at: t must be >= 0");
    return monomial_eval(expect_strat(alpha).monomial, t);
}

std::vector<std::pair<Word, ExpectResult>> expectation_table(
    std::size_t max_len, Word::Letter num_wiener, std::size_t length_cap,
    std::size_t word_cap) {
    std::vector<Word> words =
        enumerate_nonzero_words(max_len, num_wiener, length_cap, word_cap);
    std::vector<std::pair<Word, ExpectResult>> out;
    out.reserve(words.size());
    for (auto& w : words) {
        ExpectResult e = expect_strat(w);
        out.emplace_back(std::move(w), std::move(e));
    }
    return out;
}

}  // namespace stratexp
