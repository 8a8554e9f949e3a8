#include "suw/arches.hpp"

#include <bit>

#include "suw/errors.hpp"

namespace suw {

ArchFactorization arch_factorize(const Word& w) {
    const std::size_t sigma = w.sigma();
    const std::size_t n = w.size();

    ArchFactorization f;
    f.source_length = n;

    // stamp[s] == current arch number marks s as seen in the current arch.
    std::vector<std::size_t> stamp(sigma + 1, 0);
    std::size_t arch = 1;
    std::size_t seen = 0;
    std::size_t start = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        const Symbol s = w.at(i);
        if (stamp[s] != arch) {
            stamp[s] = arch;
            if (++seen == sigma) {
                f.arch_starts.push_back(start);
                start = i + 1;
                seen = 0;
                ++arch;
            }
        }
    }
    f.suffix_start = start;
    return f;
}

std::vector<Word> arch_factors(const Word& w, const ArchFactorization& f) {
    std::vector<Word> out;
    out.reserve(f.arch_count() + 1);
    for (std::size_t l = 1; l <= f.arch_count(); ++l) {
        out.push_back(w.factor(f.arch_begin(l), f.arch_end(l)));
    }
    out.push_back(w.factor(f.suffix_start, w.size()));
    return out;
}

std::size_t universality_index(const Word& w) { return arch_factorize(w).arch_count(); }

bool is_k_universal(const Word& w, std::size_t k) { return k == 0 || universality_index(w) >= k; }

std::size_t SymbolSet::size() const {
    std::size_t total = 0;
    for (std::uint64_t b : bits_) {
        total += static_cast<std::size_t>(std::popcount(b));
    }
    return total;
}

std::size_t SymbolSet::count_below(Symbol s) const {
    const std::size_t bit = s - 1;
    std::size_t total = 0;
    for (std::size_t i = 0; i < bit / 64; ++i) {
        total += static_cast<std::size_t>(std::popcount(bits_[i]));
    }
    if (bit % 64 != 0) {
        const std::uint64_t mask = (std::uint64_t{1} << (bit % 64)) - 1;
        total += static_cast<std::size_t>(std::popcount(bits_[bit / 64] & mask));
    }
    return total;
}

RankContext build_rank_context(const Word& w, std::size_t k) {
    if (k < 1) {
        throw InvalidK("rank context requires k >= 1");
    }
    const std::size_t n = w.size();
    const std::size_t sigma = w.sigma();

    RankContext ctx;
    ctx.factorization_ = arch_factorize(w);
    ctx.k_ = k;
    ctx.delta_.resize(n);
    ctx.prefix_sets_.reserve(n);
    ctx.completed_.assign(n + 1, 0);

    const ArchFactorization& f = ctx.factorization_;
    std::vector<bool> first_in_region(n, false);

    // Region starts: every arch start plus the residual suffix start.
    std::size_t next_arch = 0;
    SymbolSet current(sigma);
    std::size_t done = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const bool region_start = (next_arch < f.arch_count() && f.arch_starts[next_arch] == i) ||
                                  i == f.suffix_start;
        if (region_start) {
            current.clear();
            if (next_arch < f.arch_count() && f.arch_starts[next_arch] == i) {
                ++next_arch;
            }
        }
        const Symbol s = w.at(i);
        const bool fresh = !current.contains(s);
        current.insert(s);
        const std::size_t d = (region_start ? 0 : ctx.delta_[i - 2]) + (fresh ? 1 : 0);
        ctx.delta_[i - 1] = static_cast<std::uint32_t>(d);
        ctx.prefix_sets_.push_back(current);
        first_in_region[i - 1] = fresh;
        if (d == sigma && i < f.suffix_start) {
            ++done;
        }
        ctx.completed_[i] = done;
    }

    ctx.free_suffix_.assign(n + 1, 0);
    for (std::size_t i = n; i >= 1; --i) {
        // Arch number of position i is completed_[i - 1] + 1 for positions
        // before the residual suffix.
        const bool in_constrained_arch = i < f.suffix_start && ctx.completed_[i - 1] < k;
        const bool is_free = !(in_constrained_arch && first_in_region[i - 1]);
        ctx.free_suffix_[i - 1] = ctx.free_suffix_[i] + (is_free ? 1 : 0);
    }
    return ctx;
}

}  // namespace suw
