#include "suw/ranking.hpp"

#include <string>

#include "suw/arches.hpp"
#include "suw/errors.hpp"

namespace suw {

namespace {

void check_compatible(const Word& w, std::size_t k, const SuffixCountTable& table) {
    if (w.size() != table.n()) {
        throw LengthMismatch("word length " + std::to_string(w.size()) +
                             " does not match table length " + std::to_string(table.n()));
    }
    if (w.sigma() != table.sigma()) {
        throw AlphabetMismatch("word alphabet size " + std::to_string(w.sigma()) +
                               " does not match table alphabet size " +
                               std::to_string(table.sigma()));
    }
    if (k != table.k()) {
        throw InvalidK("k=" + std::to_string(k) + " does not match table k=" +
                       std::to_string(table.k()));
    }
}

// With k = 0 every word is a member and the rank is the base-sigma value.
RankResult rank_all_words(const Word& w, const SuffixCountTable& table, LookupCounter* counter) {
    RankResult result{BigCount{0}, true};
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] > 1) {
            result.rank += table.power(n - i - 1, counter) * (w[i] - 1);
        }
    }
    return result;
}

}  // namespace

RankResult rank(const Word& w, std::size_t k, const SuffixCountTable& table,
                LookupCounter* counter) {
    check_compatible(w, k, table);
    if (k == 0) {
        return rank_all_words(w, table, counter);
    }

    const std::size_t n = w.size();
    const std::size_t sigma = w.sigma();
    const RankContext ctx = build_rank_context(w, k);

    RankResult result{BigCount{0}, ctx.factorization().arch_count() >= k};
    const SymbolSet none(sigma);
    for (std::size_t i = 0; i < n; ++i) {
        const Symbol next = w[i];
        const std::size_t smaller = next - 1;
        if (smaller == 0) {
            continue;
        }
        const std::size_t remaining = n - i - 1;
        const std::size_t done = ctx.arches_completed(i);
        if (done >= k) {
            result.rank += table.power(remaining, counter) * smaller;
            continue;
        }

        // State of the current partial arch after w[1, i]. A prefix ending
        // exactly on an arch boundary has an empty partial arch.
        const bool fresh_arch = i == 0 || ctx.delta(i) == sigma;
        const std::size_t seen = fresh_arch ? 0 : ctx.delta(i);
        const SymbolSet& seen_set = fresh_arch ? none : ctx.prefix_set(i);

        const std::size_t repeats = seen_set.count_below(next);
        const std::size_t fresh = smaller - repeats;
        const std::size_t arches_left = k - done;
        if (repeats != 0) {
            result.rank += table.completions(seen, remaining, arches_left, counter) * repeats;
        }
        if (fresh != 0) {
            result.rank += table.completions(seen + 1, remaining, arches_left, counter) * fresh;
        }
    }
    return result;
}

RankResult rank(const Word& w, std::size_t k) {
    return rank(w, k, build_table(w.size(), k, w.sigma()));
}

}  // namespace suw
