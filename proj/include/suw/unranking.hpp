#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "suw/arches.hpp"
#include "suw/bigcount.hpp"
#include "suw/universal_dp.hpp"
#include "suw/words.hpp"

namespace suw {

namespace detail {

// Arch progress of a prefix.
struct ArchProgress {
    std::size_t arches = 0;  // complete arches in the prefix
    std::size_t seen = 0;    // distinct symbols in the partial arch
    SymbolSet seen_set;

    explicit ArchProgress(std::size_t sigma) : seen_set(sigma) {}

    /// Appends x; a completed arch resets the partial arch.
    void push(Symbol x, std::size_t sigma);
};

// Members extending a prefix by one symbol, grouped by symbol class.
struct NextCounts {
    BigCount repeat;  // per symbol already in the partial arch
    BigCount fresh;   // per symbol not yet in it

    const BigCount& of(const ArchProgress& p, Symbol x) const {
        return p.seen_set.contains(x) ? repeat : fresh;
    }
};

/// Counts for the symbol following a prefix in state `p` that leaves
/// `remaining` positions after it. At most two table reads.
NextCounts next_counts(const SuffixCountTable& table, const ArchProgress& p,
                       std::size_t remaining, LookupCounter* counter);

}  // namespace detail

/// The member of U(n, k, sigma) with exactly `r` smaller members, built one
/// symbol at a time with O(sigma) work per position.
///
/// Throws EmptySet when the set is empty and RankOutOfRange when r >= |U|.
Word unrank(const BigCount& r, const SuffixCountTable& table, LookupCounter* counter = nullptr);

/// Convenience overload that builds the table.
Word unrank(const BigCount& r, std::size_t n, std::size_t k, std::size_t sigma);

// Streams U(n, k, sigma) in increasing lexicographic order starting at a
// given rank. The first word is unranked; every later one is derived from its
// predecessor by bumping the rightmost position that still has a larger
// completable symbol and refilling the tail with the smallest completions.
// That costs at most four table reads per position between outputs.
//
// Single consumer. Independent cursors over one table may run concurrently.
class EnumerationCursor {
public:
    /// Throws RankOutOfRange when from_rank > |U|.
    EnumerationCursor(std::shared_ptr<const SuffixCountTable> table, BigCount from_rank);

    /// The next member, or nullopt once the set is exhausted.
    std::optional<Word> next();

    const BigCount& next_rank() const noexcept { return next_rank_; }
    const BigCount& total() const noexcept { return total_; }
    bool done() const noexcept { return next_rank_ == total_; }

    /// Table reads made so far, including the initial unranking.
    std::uint64_t lookups() const noexcept { return counter_.lookups; }

private:
    bool bump();

    std::shared_ptr<const SuffixCountTable> table_;
    BigCount total_;
    BigCount next_rank_;
    std::vector<Symbol> word_;
    std::vector<detail::ArchProgress> frames_;  // frames_[j]: state after word_[0, j)
    bool positioned_ = false;
    LookupCounter counter_;
};

/// Up to `limit` members starting at `from_rank` (all remaining when unset).
std::vector<Word> enumerate(std::size_t n, std::size_t k, std::size_t sigma,
                            const BigCount& from_rank = BigCount{0},
                            std::optional<std::uint64_t> limit = std::nullopt);

}  // namespace suw
