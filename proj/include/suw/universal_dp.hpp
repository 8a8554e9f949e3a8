#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "suw/bigcount.hpp"

namespace suw {

/// Instrumentation: incremented once per table read.
struct LookupCounter {
    std::uint64_t lookups = 0;
};

/// Order in which build_table visits the (c, m) grid. Both respect the
/// dependencies of the recurrence and must give identical tables.
enum class FillOrder {
    ArchesOuter,  // c, then m, then q descending
    FreeOuter,    // m, then c, then q descending
};

// CountSuffixes over suffix states (q, m, c):
//   q  distinct symbols already seen in the current partial arch, 0..sigma
//   m  free symbols the suffix must still contain
//   c  arches still to complete, counting the current one
// entry(q, m, c) is the number of suffixes of length m + (sigma-q) + sigma(c-1)
// that complete c arches from that state with exactly m free symbols, where
// everything after the last required arch counts as free. q = sigma means the
// current arch has just completed and equals state (0, m, c-1).
class SuffixCountTable {
public:
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t sigma() const noexcept { return sigma_; }

    /// Table entry; throws IndexOutOfRange outside [0,sigma] x [0,n] x [0,k].
    const BigCount& at(std::size_t q, std::size_t m, std::size_t c,
                       LookupCounter* counter = nullptr) const;

    /// sigma^m for m in [0, n].
    const BigCount& power(std::size_t m, LookupCounter* counter = nullptr) const;

    /// Number of suffixes of length `remaining` that finish `arches_left`
    /// arches, given `q` symbols already seen in the current arch. States
    /// that cannot fit in `remaining` symbols count zero; arches_left = 0
    /// leaves the suffix unconstrained.
    BigCount completions(std::size_t q, std::size_t remaining, std::size_t arches_left,
                         LookupCounter* counter = nullptr) const;

    /// |U(n, k, sigma)|.
    BigCount universal_count() const;

    /// Table reads performed while filling the table.
    std::uint64_t construction_lookups() const noexcept { return construction_lookups_; }

    std::size_t entry_count() const noexcept { return entries_.size(); }

private:
    friend SuffixCountTable build_table(std::size_t n, std::size_t k, std::size_t sigma,
                                        FillOrder order);

    std::size_t index(std::size_t q, std::size_t m, std::size_t c) const {
        return (c * (n_ + 1) + m) * (sigma_ + 1) + q;
    }
    void fill(std::size_t q, std::size_t m, std::size_t c,
              const std::vector<std::vector<BigCount>>& base);

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::size_t sigma_ = 1;
    std::vector<BigCount> entries_;
    std::vector<BigCount> powers_;
    std::uint64_t construction_lookups_ = 0;
};

/// Fills the whole (sigma+1) x (n+1) x (k+1) table in O(n k sigma) steps.
/// Throws std::invalid_argument when sigma == 0.
SuffixCountTable build_table(std::size_t n, std::size_t k, std::size_t sigma,
                             FillOrder order = FillOrder::ArchesOuter);

/// CountSuffixes(q, m, c) read from the table. Throws IndexOutOfRange.
BigCount count_suffixes(const SuffixCountTable& table, std::size_t q, std::size_t m,
                        std::size_t c);

/// |U(n, k, sigma)|: the number of n-length words with universality index >= k.
BigCount count_universal(std::size_t n, std::size_t k, std::size_t sigma);

}  // namespace suw
