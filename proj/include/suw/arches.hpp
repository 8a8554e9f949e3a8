#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "suw/words.hpp"

namespace suw {

// Greedy arch factorization w = w_1 w_2 ... w_r v. Each w_l is an arch: it
// contains every symbol of the alphabet and its last symbol occurs nowhere
// else in it. The residual suffix v misses at least one symbol. r is the
// universality index of w. All indices are 1-based.
struct ArchFactorization {
    std::vector<std::size_t> arch_starts;  // A_1 = 1, A_2, ..., A_r
    std::size_t suffix_start = 1;          // n + 1 when v is empty
    std::size_t source_length = 0;

    std::size_t arch_count() const noexcept { return arch_starts.size(); }

    /// First position of arch `l` (1-based arch number).
    std::size_t arch_begin(std::size_t l) const { return arch_starts.at(l - 1); }
    /// Last position of arch `l`.
    std::size_t arch_end(std::size_t l) const {
        return l < arch_starts.size() ? arch_starts[l] - 1 : suffix_start - 1;
    }

    friend bool operator==(const ArchFactorization&, const ArchFactorization&) = default;
};

/// Linear-time greedy factorization.
ArchFactorization arch_factorize(const Word& w);

/// The arch factors followed by the residual suffix (which may be empty).
std::vector<Word> arch_factors(const Word& w, const ArchFactorization& f);

/// Largest k such that every word of length k is a subsequence of w.
std::size_t universality_index(const Word& w);

bool is_k_universal(const Word& w, std::size_t k);

/// A fixed-capacity set of symbols from {1..sigma}, one bit per symbol.
class SymbolSet {
public:
    SymbolSet() = default;
    explicit SymbolSet(std::size_t sigma) : bits_((sigma + 63) / 64, 0) {}

    void insert(Symbol s) { bits_[(s - 1) / 64] |= std::uint64_t{1} << ((s - 1) % 64); }
    bool contains(Symbol s) const {
        return (bits_[(s - 1) / 64] >> ((s - 1) % 64)) & 1U;
    }
    void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

    std::size_t size() const;
    /// Number of members strictly smaller than `s`.
    std::size_t count_below(Symbol s) const;

    friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

private:
    std::vector<std::uint64_t> bits_;
};

// Per-position data for ranking w against U(n,k,sigma). Each position i
// belongs to a region starting at some A (an arch start, or the residual
// suffix start); delta(i) and prefix_set(i) describe w[A, i].
class RankContext {
public:
    const ArchFactorization& factorization() const noexcept { return factorization_; }
    std::size_t size() const noexcept { return delta_.size(); }
    std::size_t k() const noexcept { return k_; }

    /// Number of distinct symbols in w[A, i], i in [1, n].
    std::size_t delta(std::size_t i) const { return delta_.at(i - 1); }

    /// Set of symbols in w[A, i], i in [1, n].
    const SymbolSet& prefix_set(std::size_t i) const { return prefix_sets_.at(i - 1); }

    /// Free positions in w[i, n], i in [1, n + 1]; free_suffix(n + 1) = 0.
    /// A position is not free iff it is the first occurrence of its symbol
    /// inside one of the first k arches. Positions in later arches and in
    /// the residual suffix are free.
    std::size_t free_suffix(std::size_t i) const { return free_suffix_.at(i - 1); }

    /// Number of complete arches within w[1, i], i in [0, n].
    std::size_t arches_completed(std::size_t i) const { return completed_.at(i); }

private:
    friend RankContext build_rank_context(const Word& w, std::size_t k);

    ArchFactorization factorization_;
    std::size_t k_ = 0;
    std::vector<std::uint32_t> delta_;
    std::vector<SymbolSet> prefix_sets_;
    std::vector<std::size_t> free_suffix_;
    std::vector<std::size_t> completed_;
};

/// O(n sigma) preprocessing. Throws InvalidK when k < 1.
RankContext build_rank_context(const Word& w, std::size_t k);

}  // namespace suw
