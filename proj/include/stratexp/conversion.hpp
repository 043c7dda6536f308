#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "stratexp/rational.hpp"
#include "stratexp/word.hpp"

namespace stratexp {

/// A finite rational linear combination of Ito iterated integrals,
/// sum over terms of coeff * I_word. Keys are held in length-then-lex
/// order and zero coefficients are never stored.
///
/// Every combination produced by strat_to_ito has at most one key made of
/// zeros only; all other keys contain a nonzero letter. That single all-zero
/// term is what survives under expectation.
class ItoCombination {
public:
    using TermMap = std::map<Word, Rational>;

    ItoCombination() = default;

    /// Adds c * I_w, merging with an existing term; drops the term if the
    /// merged coefficient is zero.
    void add_term(const Word& w, const Rational& c);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    friend bool operator==(const ItoCombination&, const ItoCombination&) = default;

private:
    TermMap terms_;
};

struct DecompositionLimits {
    std::size_t max_word_len = 16;
    std::size_t max_terms = std::size_t{1} << 20;
};

/// Rewrites the Stratonovich iterated integral J_alpha as an exact Ito-basis
/// combination.
///
/// Works along the word: the expansion of each prefix is obtained from the
/// previous one by appending the new letter to every key (appending commutes
/// with linear combinations), plus, when the last two letters are equal and
/// nonzero, half the two-shorter prefix's expansion with a 0 appended. Each
/// prefix is expanded once. The empty word gives {I_[] -> 1}.
///
/// Throws cap_error when |alpha| exceeds limits.max_word_len or any prefix
/// expansion exceeds limits.max_terms terms. Pure function, no shared state;
/// safe to call concurrently.
ItoCombination strat_to_ito(const Word& alpha,
                            const DecompositionLimits& limits = {});

/// The (coefficient, length) of the combination's all-zero key, or nullopt
/// when there is none (zero expectation). Throws std::logic_error if two
/// all-zero keys are present.
std::optional<std::pair<Rational, std::size_t>> combination_p_q(
    const ItoCombination& c);

/// E I_beta(t): zero when beta has a nonzero letter, else t^l / l!.
Monomial expect_ito(const Word& beta);

/// Expectation of a combination, term by term. At most one term of a
/// strat_to_ito output survives, so the sum is a single monomial.
Monomial expect_combination(const ItoCombination& c);

}  // namespace stratexp
