#pragma once

// Brute-force reference implementations. Everything here works directly from
// the definitions (subsequence matching, exhaustive enumeration) and links
// only against the word and integer types, never the arch or counting code.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "suw/bigcount.hpp"
#include "suw/words.hpp"

namespace suw::oracle {

inline constexpr std::uint64_t kMaxPatterns = 1'000'000;    // sigma^k
inline constexpr std::uint64_t kMaxWords = 10'000'000;      // sigma^n

/// Greedy left-to-right subsequence test.
bool is_subsequence(const Word& u, const Word& w);

/// Checks every u in Sigma^k. Throws GuardExceeded when sigma^k > kMaxPatterns.
bool brute_is_k_universal(const Word& w, std::size_t k);

/// Largest k with brute_is_k_universal(w, k), found by trying k = 1, 2, ...
std::size_t brute_universality_index(const Word& w);

/// All of Sigma^n in lexicographic order. Throws GuardExceeded when sigma^n > kMaxWords.
std::vector<Word> all_words(std::size_t n, std::size_t sigma);

/// Members of U(n, k, sigma) in lexicographic order. Same guard as all_words.
std::vector<Word> brute_enumerate(std::size_t n, std::size_t k, std::size_t sigma);

/// Lower-bound insertion index of w in brute_enumerate(|w|, k, sigma).
BigCount brute_rank(const Word& w, std::size_t k);

/// Same, against an already enumerated sorted member list.
std::size_t insertion_index(const std::vector<Word>& sorted_members, const Word& w);

/// Number of n-length words missing at least one symbol, by enumeration.
std::uint64_t brute_count_index_zero(std::size_t n, std::size_t sigma);

/// Number of n-length arches by enumeration: every symbol present and the
/// final symbol absent from the rest of the word.
std::uint64_t brute_count_arches(std::size_t n, std::size_t sigma);

}  // namespace suw::oracle
