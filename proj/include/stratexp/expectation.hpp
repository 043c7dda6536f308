#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stratexp/rational.hpp"
#include "stratexp/word.hpp"

namespace stratexp {

/// Expectation of a Stratonovich iterated integral as a single monomial in
/// the time horizon, with the two counts it is built from kept visible:
/// the coefficient is (1/2)^halvings / q! and the power is q.
struct ExpectResult {
    Monomial monomial;
    std::size_t halvings = 0;
    std::size_t q = 0;
    bool nonzero = false;
};

/// Closed-form E J_alpha(t).
///
/// Scans alpha right to left, consuming either a 0 (q += 1) or a pair of
/// equal nonzero letters (halvings += 1, q += 1); any other letter pattern
/// means the expectation is zero. At most |alpha| consumptions. Cost O(l);
/// no word-length limit.
ExpectResult expect_strat(const Word& alpha);

/// E J_alpha(t) evaluated at t >= 0, exactly. Throws std::domain_error for
/// negative t.
Rational expect_strat_at(const Word& alpha, const Rational& t);

/// Every word from enumerate_nonzero_words(max_len, num_wiener) paired with
/// its (always nonzero) expectation.
std::vector<std::pair<Word, ExpectResult>> expectation_table(
    std::size_t max_len, Word::Letter num_wiener,
    std::size_t length_cap = kDefaultEnumerationLengthCap,
    std::size_t word_cap = kDefaultEnumerationWordCap);

}  // namespace stratexp
