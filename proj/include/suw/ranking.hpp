#pragma once

#include <cstddef>

#include "suw/bigcount.hpp"
#include "suw/universal_dp.hpp"
#include "suw/words.hpp"

namespace suw {

struct RankResult {
    BigCount rank;        // members of U(n,k,sigma) strictly smaller than the word
    bool member = false;  // whether the word itself is in U(n,k,sigma)

    friend bool operator==(const RankResult&, const RankResult&) = default;
};

/// 0-based lexicographic rank of `w` among U(n, k, sigma), where the table
/// fixes n, k and sigma. `w` need not be a member. O(n sigma) given the table.
///
/// Throws LengthMismatch when |w| != table.n(), AlphabetMismatch when the
/// alphabets differ, InvalidK when k != table.k().
RankResult rank(const Word& w, std::size_t k, const SuffixCountTable& table,
                LookupCounter* counter = nullptr);

/// Convenience overload that builds the table.
RankResult rank(const Word& w, std::size_t k);

}  // namespace suw
