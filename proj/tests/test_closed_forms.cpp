#include <doctest.h>

#include "suw/closed_forms.hpp"
#include "suw/oracle.hpp"

using namespace suw;

TEST_CASE("factorial and binomial tables") {
    CHECK(factorial(0) == BigCount{1});
    CHECK(factorial(5) == BigCount{120});
    CHECK(factorial(25).to_string() == "15511210043330985984000000");
    CHECK(binomial(5, 2) == BigCount{10});
    CHECK(binomial(5, 0) == BigCount{1});
    CHECK(binomial(5, 5) == BigCount{1});
    CHECK(binomial(3, 4) == BigCount{0});
    CHECK(binomial(60, 30).to_string() == "118264581564861424");
}

TEST_CASE("closed forms on small examples") {
    CHECK(count_index_zero(3, 3) == BigCount{21});
    CHECK(count_index_zero(2, 2) == BigCount{2});
    for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(count_index_zero(n, 1) == BigCount{0});
    }
    // The empty word misses the only symbol.
    CHECK(count_index_zero(0, 1) == BigCount{1});

    CHECK(count_one_universal(3, 3) == BigCount{6});
    CHECK(count_one_universal(2, 2) == BigCount{2});
    for (std::size_t sigma = 1; sigma <= 6; ++sigma) {
        CHECK(count_one_universal(0, sigma) == BigCount{0});
    }

    CHECK(count_arches(2, 2) == BigCount{2});
    CHECK(count_arches(3, 2) == BigCount{2});
    for (std::size_t sigma = 1; sigma <= 9; ++sigma) {
        CHECK(count_arches(sigma, sigma) == factorial(sigma));
    }
    CHECK_THROWS_AS((void)count_arches(0, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)count_index_zero(3, 0), std::invalid_argument);
}

TEST_CASE("closed forms agree with brute-force enumeration") {
    for (std::size_t sigma = 1; sigma <= 4; ++sigma) {
        for (std::size_t n = 0; n <= 10; ++n) {
            const std::uint64_t zero = oracle::brute_count_index_zero(n, sigma);
            CHECK(count_index_zero(n, sigma) == BigCount{zero});
            CHECK(count_one_universal(n, sigma) == BigCount::pow(sigma, n) - BigCount{zero});
            if (n >= 1) {
                CHECK(count_arches(n, sigma) == BigCount{oracle::brute_count_arches(n, sigma)});
            }
        }
    }
}

TEST_CASE("closed-form identities") {
    for (std::size_t sigma = 1; sigma <= 10; ++sigma) {
        for (std::size_t n = 0; n <= 64; ++n) {
            CHECK(count_index_zero(n, sigma) + count_one_universal(n, sigma) ==
                  BigCount::pow(sigma, n));
            if (sigma >= 2 && n >= 1) {
                CHECK(count_arches(n, sigma) ==
                      count_one_universal(n - 1, sigma - 1) * static_cast<std::uint64_t>(sigma));
            }
        }
    }
}
