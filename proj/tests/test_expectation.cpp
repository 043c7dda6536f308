#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stratexp/conversion.hpp"
#include "stratexp/expectation.hpp"

using namespace stratexp;

namespace {

std::vector<Word> words_up_to(std::size_t max_len, Word::Letter alphabet_max) {
    std::vector<Word> out{Word{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i)
            for (Word::Letter m = 0; m <= alphabet_max; ++m)
                out.push_back(out[i].appended(m));
        level_start = level_end;
    }
    return out;
}

}  // namespace

TEST_CASE("known expectations") {
    ExpectResult r = expect_strat(Word{0, 1, 1, 0, 0});
    CHECK(r.nonzero);
    CHECK(r.halvings == 1);
    CHECK(r.q == 4);
    CHECK(r.monomial == Monomial(Rational(1, 48), 4));

    r = expect_strat(Word{0, 1, 1, 0, 0, 1});
    CHECK_FALSE(r.nonzero);
    CHECK(r.monomial == Monomial{});

    r = expect_strat(Word{2, 2, 1, 1, 3, 3});
    CHECK(r.nonzero);
    CHECK(r.halvings == 3);
    CHECK(r.q == 3);
    CHECK(r.monomial == Monomial(Rational(1, 48), 3));

    r = expect_strat(Word{2, 2, 0, 1, 1, 3, 3, 0, 0, 0});
    CHECK(r.nonzero);
    CHECK(r.halvings == 3);
    CHECK(r.q == 7);
    CHECK(r.monomial == Monomial(Rational(1, 40320), 7));

    r = expect_strat(Word{});
    CHECK(r.nonzero);
    CHECK(r.halvings == 0);
    CHECK(r.q == 0);
    CHECK(r.monomial == Monomial(Rational(1), 0));
}

TEST_CASE("expect_strat_at") {
    CHECK(expect_strat_at(Word{0, 1, 1, 0, 0}, Rational(1)) == Rational(1, 48));
    CHECK(expect_strat_at(Word{1}, Rational(5)) == 0);
    CHECK(expect_strat_at(Word{1, 1}, Rational(2)) == 1);
    CHECK(expect_strat_at(Word{}, Rational(0)) == 1);
    CHECK(expect_strat_at(Word{0}, Rational(0)) == 0);
    CHECK_THROWS_AS(expect_strat_at(Word{1, 1}, Rational(-1)), std::domain_error);
}

TEST_CASE("nonzero exactly on zero-pair words, with the two counts") {
    for (const Word& alpha : words_up_to(8, 2)) {
        ExpectResult r = expect_strat(alpha);
        CHECK(r.nonzero == is_zero_pair_word(alpha));
        if (r.nonzero) {
            CHECK(r.halvings == nonzero_count(alpha) / 2);
            CHECK(r.q == nonzero_count(alpha) / 2 + zero_count(alpha));
            CHECK(r.monomial.coeff() ==
                  rational_pow(Rational(1, 2), static_cast<unsigned>(r.halvings)) /
                      factorial(static_cast<unsigned>(r.q)));
            CHECK(r.monomial.power() == r.q);
        }
    }
}

TEST_CASE("expectation is reversal-invariant") {
    std::mt19937 gen(123);
    std::uniform_int_distribution<std::size_t> len_dist(0, 20);
    std::uniform_int_distribution<Word::Letter> letter_dist(0, 3);
    for (int i = 0; i < 2000; ++i) {
        std::vector<Word::Letter> letters(len_dist(gen));
        for (auto& m : letters) m = letter_dist(gen);
        Word w(letters);
        ExpectResult a = expect_strat(w);
        ExpectResult b = expect_strat(w.reversed());
        CHECK(a.nonzero == b.nonzero);
        CHECK(a.monomial == b.monomial);
        CHECK(a.halvings == b.halvings);
        CHECK(a.q == b.q);
    }
}

TEST_CASE("time-only words match the Ito expectation") {
    for (std::size_t n = 0; n <= 12; ++n) {
        Word w(std::vector<Word::Letter>(n, 0));
        ExpectResult r = expect_strat(w);
        CHECK(r.nonzero);
        CHECK(r.monomial == expect_ito(w));
        CHECK(r.monomial == Monomial(Rational(1, factorial(static_cast<unsigned>(n))),
                                     static_cast<unsigned>(n)));
    }
}

TEST_CASE("agrees with the decomposition route") {
    for (const Word& alpha : words_up_to(8, 2))
        CHECK(expect_strat(alpha).monomial ==
              expect_combination(strat_to_ito(alpha)));
}

TEST_CASE("handles words far past 64-bit factorials") {
    // 30 Wiener pairs and 40 zeros: q = 70, coefficient 1/(2^30 * 70!)
    std::vector<Word::Letter> letters;
    for (int i = 0; i < 30; ++i) {
        letters.push_back(5);
        letters.push_back(5);
    }
    for (int i = 0; i < 40; ++i) letters.push_back(0);
    ExpectResult r = expect_strat(Word(letters));
    CHECK(r.nonzero);
    CHECK(r.halvings == 30);
    CHECK(r.q == 70);
    CHECK(r.monomial.coeff() == Rational(1, (BigInt(1) << 30) * factorial(70)));
    CHECK(r.monomial.power() == 70);
}

TEST_CASE("the scan is linear in the word length") {
    // a million-letter word that fails on the last-considered block
    std::vector<Word::Letter> letters(1000000, 0);
    letters[0] = 1;
    ExpectResult r = expect_strat(Word(std::move(letters)));
    CHECK_FALSE(r.nonzero);

    // a 50k-letter zero-pair word; q = 25000 + 12500
    std::vector<Word::Letter> big;
    for (int i = 0; i < 12500; ++i) {
        big.push_back(0);
        big.push_back(3);
        big.push_back(3);
        big.push_back(0);
    }
    ExpectResult ok = expect_strat(Word(std::move(big)));
    CHECK(ok.nonzero);
    CHECK(ok.halvings == 12500);
    CHECK(ok.q == 37500);
}

TEST_CASE("expectation_table") {
    auto table = expectation_table(2, 1);
    REQUIRE(table.size() == 4);
    CHECK(table[0].first == Word{});
    CHECK(table[0].second.monomial == Monomial(Rational(1), 0));
    CHECK(table[1].first == Word{0});
    CHECK(table[1].second.monomial == Monomial(Rational(1), 1));
    CHECK(table[2].first == Word{0, 0});
    CHECK(table[2].second.monomial == Monomial(Rational(1, 2), 2));
    CHECK(table[3].first == Word{1, 1});
    CHECK(table[3].second.monomial == Monomial(Rational(1, 2), 1));

    auto trivial = expectation_table(0, 1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].first == Word{});

    bool found = false;
    for (const auto& [w, r] : expectation_table(3, 1)) {
        CHECK(r.nonzero);  // every listed expectation is nonzero
        if (w == Word{0, 1, 1}) {
            found = true;
            CHECK(r.monomial == Monomial(Rational(1, 4), 2));
            CHECK(r.halvings == 1);
            CHECK(r.q == 2);
        }
    }
    CHECK(found);
}
