#include <doctest.h>

#include <random>

#include "suw/errors.hpp"
#include "suw/oracle.hpp"
#include "suw/words.hpp"
#include "test_support.hpp"

using namespace suw;
using suw::test::w;

TEST_CASE("make_word validates symbols") {
    const Word a = make_word({1, 2, 1, 2}, 2);
    CHECK(a.size() == 4);
    CHECK(format_word(a) == "1212");
    CHECK(a.at(1) == 1);
    CHECK(a.at(4) == 2);

    const Word empty = make_word({}, 3);
    CHECK(empty.empty());
    CHECK(empty.sigma() == 3);

    try {
        (void)make_word({1, 3}, 2);
        FAIL("expected SymbolOutOfRange");
    } catch (const SymbolOutOfRange& e) {
        CHECK(e.position() == 2);
        CHECK(e.value() == 3);
    }
    CHECK_THROWS_AS((void)make_word({0}, 2), SymbolOutOfRange);
    CHECK_THROWS_AS((void)make_word({1}, 0), std::invalid_argument);
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(w("1221", 2), w("2112", 2)) == std::strong_ordering::less);
    CHECK(lex_compare(w("1212", 2), w("1212", 2)) == std::strong_ordering::equal);
    CHECK(lex_compare(w("1212", 2), w("1221", 2)) == std::strong_ordering::less);
    CHECK(lex_compare(w("1221", 2), w("1212", 2)) == std::strong_ordering::greater);
    CHECK_THROWS_AS((void)lex_compare(w("12", 2), w("121", 2)), LengthMismatch);
    CHECK_THROWS_AS((void)lex_compare(w("12", 2), w("12", 3)), AlphabetMismatch);
}

TEST_CASE("lex_compare is a total order matching the first-difference definition") {
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto words = oracle::all_words(n, 2);
        for (const Word& a : words) {
            for (const Word& b : words) {
                // Direct reading: less iff some i has a[1,i-1] = b[1,i-1] and a[i] < b[i].
                bool less = false;
                for (std::size_t i = 1; i <= n; ++i) {
                    if (a.factor(1, i - 1) == b.factor(1, i - 1) && a.at(i) < b.at(i)) {
                        less = true;
                    }
                }
                const auto ord = lex_compare(a, b);
                CHECK((ord == std::strong_ordering::less) == less);
                CHECK((ord == std::strong_ordering::equal) == (a == b));
                CHECK(lex_compare(b, a) == (0 <=> ord));
                for (const Word& c : words) {
                    if (ord < 0 && lex_compare(b, c) < 0) {
                        CHECK(lex_compare(a, c) < 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("parse_word and format_word") {
    CHECK(parse_word("1212", 2) == make_word({1, 2, 1, 2}, 2));
    CHECK(parse_word("10,2,10", 12) == make_word({10, 2, 10}, 12));
    CHECK(parse_word("", 3).empty());
    CHECK(parse_word("", 12).empty());
    CHECK(format_word(make_word({1, 2, 1}, 2)) == "121");
    CHECK(format_word(make_word({}, 4)).empty());
    CHECK(format_word(make_word({11, 2}, 11)) == "11,2");

    try {
        (void)parse_word("12a", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS((void)parse_word("1,2", 2), ParseError);
    CHECK_THROWS_AS((void)parse_word("1,,2", 12), ParseError);
    CHECK_THROWS_AS((void)parse_word("1,2,", 12), ParseError);
    CHECK_THROWS_AS((void)parse_word("1 2", 12), ParseError);
    CHECK_THROWS_AS((void)parse_word("13", 2), SymbolOutOfRange);
    CHECK_THROWS_AS((void)parse_word("0", 2), SymbolOutOfRange);
    CHECK_THROWS_AS((void)parse_word("13,1", 12), SymbolOutOfRange);
    CHECK_THROWS_AS((void)parse_word("99999999999999999999999", 12), ParseError);
}

TEST_CASE("format/parse round trip on random words") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        const std::size_t sigma = 1 + rng() % 20;
        const Word a = suw::test::random_word(rng, rng() % 30, sigma);
        CHECK(parse_word(format_word(a), sigma) == a);
    }
}

TEST_CASE("factor") {
    const Word a = w("11234", 4);
    CHECK(a.factor(2, 4) == w("123", 4));
    CHECK(a.factor(3, 2).empty());
    CHECK_THROWS_AS((void)a.factor(4, 6), IndexOutOfRange);
}
