#include <doctest.h>

#include "suw/closed_forms.hpp"
#include "suw/errors.hpp"
#include "suw/oracle.hpp"
#include "suw/universal_dp.hpp"

using namespace suw;

namespace {

// Brute-force CountSuffixes: suffixes u of the state's length such that the
// prefix 1 2 ... q followed by u has universality index >= c. For q = sigma the
// prefix is itself one arch, which the state counts among the c.
std::uint64_t brute_entry(std::size_t q, std::size_t m, std::size_t c, std::size_t sigma) {
    const std::size_t length = c == 0 ? m : m + (sigma - q) + sigma * (c - 1);
    std::vector<Symbol> prefix;
    for (Symbol s = 1; s <= q; ++s) {
        prefix.push_back(s);
    }
    std::uint64_t count = 0;
    for (const Word& u : oracle::all_words(length, sigma)) {
        std::vector<Symbol> full = prefix;
        full.insert(full.end(), u.begin(), u.end());
        const Word x = make_word(std::span<const Symbol>(full), sigma);
        if (c == 0 || oracle::brute_is_k_universal(x, c)) {
            ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("table examples") {
    const SuffixCountTable t2 = build_table(6, 2, 2);
    CHECK(count_suffixes(t2, 1, 0, 2) == BigCount{2});
    CHECK(count_suffixes(t2, 1, 1, 1) == BigCount{3});
    CHECK(brute_entry(1, 1, 1, 2) == 3);
    CHECK(count_suffixes(t2, 1, 1, 2) == BigCount{8});
    CHECK(brute_entry(1, 1, 2, 2) == 8);
    CHECK(count_suffixes(t2, 1, 0, 1) == BigCount{1});
    CHECK(count_suffixes(t2, 0, 0, 2) == BigCount{4});

    const SuffixCountTable t3 = build_table(5, 2, 3);
    for (std::size_t q = 0; q <= 3; ++q) {
        CHECK(count_suffixes(t3, q, 5, 0) == BigCount{243});
    }
    CHECK(count_suffixes(t3, 0, 0, 2) == BigCount{36});
    CHECK(count_suffixes(t3, 2, 0, 1) == BigCount{1});

    CHECK_THROWS_AS((void)count_suffixes(t3, 4, 0, 0), IndexOutOfRange);
    CHECK_THROWS_AS((void)count_suffixes(t3, 0, 6, 0), IndexOutOfRange);
    CHECK_THROWS_AS((void)count_suffixes(t3, 0, 0, 3), IndexOutOfRange);
}

TEST_CASE("table entries match brute-force suffix counts") {
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        const std::size_t k = 3;
        const SuffixCountTable t = build_table(6, k, sigma);
        for (std::size_t c = 0; c <= k; ++c) {
            for (std::size_t q = 0; q <= sigma; ++q) {
                for (std::size_t m = 0; m <= 6; ++m) {
                    const std::size_t length = c == 0 ? m : m + (sigma - q) + sigma * (c - 1);
                    if (length > 9) {
                        continue;
                    }
                    CAPTURE(sigma);
                    CAPTURE(q);
                    CAPTURE(m);
                    CAPTURE(c);
                    CHECK(t.at(q, m, c) == BigCount{brute_entry(q, m, c, sigma)});
                }
            }
        }
    }
}

TEST_CASE("table base cases and structure") {
    for (std::size_t sigma = 1; sigma <= 5; ++sigma) {
        const std::size_t n = 12;
        const std::size_t k = 4;
        const SuffixCountTable t = build_table(n, k, sigma);
        CHECK(t.entry_count() == (sigma + 1) * (n + 1) * (k + 1));
        for (std::size_t q = 0; q <= sigma; ++q) {
            for (std::size_t c = 1; c <= k; ++c) {
                BigCount expected = factorial(sigma - q);
                for (std::size_t i = 1; i < c; ++i) {
                    expected *= factorial(sigma);
                }
                CHECK(t.at(q, 0, c) == expected);
            }
            for (std::size_t m = 0; m <= n; ++m) {
                CHECK(t.at(q, m, 0) == BigCount::pow(sigma, m));
            }
        }
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::size_t c = 1; c <= k; ++c) {
                CHECK(t.at(0, m, c) == t.at(1, m, c) * static_cast<std::uint64_t>(sigma));
                CHECK(t.at(sigma, m, c) == t.at(0, m, c - 1));
            }
        }
    }
}

TEST_CASE("fill order does not change the table") {
    for (std::size_t sigma = 1; sigma <= 4; ++sigma) {
        const SuffixCountTable a = build_table(15, 4, sigma, FillOrder::ArchesOuter);
        const SuffixCountTable b = build_table(15, 4, sigma, FillOrder::FreeOuter);
        CHECK(a.construction_lookups() == b.construction_lookups());
        for (std::size_t q = 0; q <= sigma; ++q) {
            for (std::size_t m = 0; m <= 15; ++m) {
                for (std::size_t c = 0; c <= 4; ++c) {
                    CHECK(a.at(q, m, c) == b.at(q, m, c));
                }
            }
        }
    }
}

TEST_CASE("completions handles infeasible and unconstrained states") {
    const SuffixCountTable t = build_table(8, 2, 2);
    CHECK(t.completions(0, 3, 2).is_zero());
    CHECK(t.completions(0, 4, 2) == BigCount{4});
    CHECK(t.completions(1, 5, 0) == BigCount{32});
    CHECK(t.completions(2, 3, 1) == BigCount{8});
    LookupCounter counter;
    (void)t.completions(1, 3, 1, &counter);
    (void)t.completions(0, 1, 2, &counter);  // infeasible, no read
    CHECK(counter.lookups == 1);
}

TEST_CASE("count_universal examples") {
    CHECK(count_universal(4, 2, 2) == BigCount{4});
    CHECK(count_universal(3, 1, 2) == BigCount{6});
    CHECK(count_universal(5, 2, 2) == BigCount{16});
    CHECK(count_universal(3, 2, 2) == BigCount{0});
    CHECK(count_universal(7, 0, 3) == BigCount{2187});
    CHECK(count_universal(0, 0, 3) == BigCount{1});
    CHECK(count_universal(0, 1, 3) == BigCount{0});
    for (std::size_t sigma = 1; sigma <= 5; ++sigma) {
        for (std::size_t k = 1; k <= 4; ++k) {
            BigCount expected{1};
            for (std::size_t i = 0; i < k; ++i) {
                expected *= factorial(sigma);
            }
            CHECK(count_universal(k * sigma, k, sigma) == expected);
        }
    }
}

TEST_CASE("count_universal matches brute force on small grids") {
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        for (std::size_t n = 0; n <= 9; ++n) {
            for (std::size_t k = 0; k <= n / sigma + 1; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(sigma);
                CHECK(count_universal(n, k, sigma) ==
                      BigCount{oracle::brute_enumerate(n, k, sigma).size()});
            }
        }
    }
}

TEST_CASE("count_universal properties") {
    for (std::size_t n = 0; n <= 20; ++n) {
        for (std::size_t k = 0; k <= n + 1; ++k) {
            CHECK(count_universal(n, k, 1) == BigCount{n >= k ? 1U : 0U});
        }
    }
    for (std::size_t sigma = 1; sigma <= 6; ++sigma) {
        for (std::size_t n = 0; n <= 24; ++n) {
            const SuffixCountTable t = build_table(n, 0, sigma);
            BigCount previous = t.universal_count();
            CHECK(previous == BigCount::pow(sigma, n));
            for (std::size_t k = 1; k * sigma <= n + sigma; ++k) {
                const BigCount current = count_universal(n, k, sigma);
                CHECK(current <= previous);
                previous = current;
            }
        }
    }
}

TEST_CASE("k = 1 agrees with the closed form") {
    for (std::size_t sigma = 1; sigma <= 8; ++sigma) {
        for (std::size_t n = 0; n <= 30; ++n) {
            CHECK(count_universal(n, 1, sigma) == count_one_universal(n, sigma));
        }
    }
}

TEST_CASE("construction lookups scale with the table") {
    const SuffixCountTable a = build_table(100, 3, 4);
    const SuffixCountTable b = build_table(200, 3, 4);
    const double ratio = static_cast<double>(b.construction_lookups()) /
                         static_cast<double>(a.construction_lookups());
    CHECK(ratio > 1.8);
    CHECK(ratio < 2.2);
}
