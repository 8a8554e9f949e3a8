#include "suw/unranking.hpp"

#include <string>

#include "suw/errors.hpp"

namespace suw {

namespace detail {

void ArchProgress::push(Symbol x, std::size_t sigma) {
    if (seen_set.contains(x)) {
        return;
    }
    if (++seen == sigma) {
        ++arches;
        seen = 0;
        seen_set.clear();
    } else {
        seen_set.insert(x);
    }
}

NextCounts next_counts(const SuffixCountTable& table, const ArchProgress& p,
                       std::size_t remaining, LookupCounter* counter) {
    NextCounts out;
    if (p.arches >= table.k()) {
        out.fresh = table.power(remaining, counter);
        out.repeat = out.fresh;
        return out;
    }
    const std::size_t arches_left = table.k() - p.arches;
    if (p.seen != 0) {
        out.repeat = table.completions(p.seen, remaining, arches_left, counter);
    }
    out.fresh = table.completions(p.seen + 1, remaining, arches_left, counter);
    return out;
}

}  // namespace detail

namespace {

BigCount checked_total(const SuffixCountTable& table, const BigCount& r, bool allow_end) {
    BigCount total = table.universal_count();
    if (total.is_zero() && !allow_end) {
        throw EmptySet("U(" + std::to_string(table.n()) + ", " + std::to_string(table.k()) + ", " +
                       std::to_string(table.sigma()) + ") is empty");
    }
    if (allow_end ? r > total : r >= total) {
        throw RankOutOfRange("rank " + r.to_string() + " out of range for set of size " +
                             total.to_string());
    }
    return total;
}

// Walks the word of rank r, recording each symbol and the progress after it.
// t accumulates the smallest rank of any member sharing the prefix.
void descend(const SuffixCountTable& table, const BigCount& r, std::vector<Symbol>& word,
             std::vector<detail::ArchProgress>* frames, LookupCounter* counter) {
    const std::size_t n = table.n();
    const std::size_t sigma = table.sigma();
    detail::ArchProgress progress(sigma);
    if (frames != nullptr) {
        frames->assign(1, progress);
    }
    word.clear();
    BigCount t{0};
    for (std::size_t j = 1; j <= n; ++j) {
        const detail::NextCounts counts = detail::next_counts(table, progress, n - j, counter);
        Symbol chosen = 0;
        for (Symbol x = 1; x <= sigma; ++x) {
            const BigCount& c = counts.of(progress, x);
            BigCount upper = t + c;
            if (r < upper) {
                chosen = x;
                break;
            }
            t = std::move(upper);
        }
        if (chosen == 0) {
            throw RankOutOfRange("rank " + r.to_string() + " not reachable");
        }
        word.push_back(chosen);
        progress.push(chosen, sigma);
        if (frames != nullptr) {
            frames->push_back(progress);
        }
    }
}

}  // namespace

Word unrank(const BigCount& r, const SuffixCountTable& table, LookupCounter* counter) {
    checked_total(table, r, false);
    std::vector<Symbol> word;
    descend(table, r, word, nullptr, counter);
    return make_word(std::span<const Symbol>(word), table.sigma());
}

Word unrank(const BigCount& r, std::size_t n, std::size_t k, std::size_t sigma) {
    return unrank(r, build_table(n, k, sigma));
}

EnumerationCursor::EnumerationCursor(std::shared_ptr<const SuffixCountTable> table,
                                     BigCount from_rank)
    : table_(std::move(table)), next_rank_(std::move(from_rank)) {
    total_ = checked_total(*table_, next_rank_, true);
}

std::optional<Word> EnumerationCursor::next() {
    if (done()) {
        return std::nullopt;
    }
    if (!positioned_) {
        descend(*table_, next_rank_, word_, &frames_, &counter_);
        positioned_ = true;
    } else if (!bump()) {
        // Unreachable while next_rank_ < total_.
        throw RankOutOfRange("enumeration ran past rank " + next_rank_.to_string());
    }
    next_rank_ += BigCount{1};
    return make_word(std::span<const Symbol>(word_), table_->sigma());
}

bool EnumerationCursor::bump() {
    const std::size_t n = table_->n();
    const std::size_t sigma = table_->sigma();

    std::size_t j = n;
    for (; j >= 1; --j) {
        const detail::ArchProgress& p = frames_[j - 1];
        const detail::NextCounts counts = detail::next_counts(*table_, p, n - j, &counter_);
        Symbol y = word_[j - 1] + 1;
        while (y <= sigma && counts.of(p, y).is_zero()) {
            ++y;
        }
        if (y <= sigma) {
            word_[j - 1] = y;
            frames_[j] = frames_[j - 1];
            frames_[j].push(y, sigma);
            break;
        }
    }
    if (j == 0) {
        return false;
    }

    // Smallest completion of the new prefix.
    for (std::size_t pos = j + 1; pos <= n; ++pos) {
        const detail::ArchProgress& p = frames_[pos - 1];
        const detail::NextCounts counts = detail::next_counts(*table_, p, n - pos, &counter_);
        Symbol x = 1;
        while (x <= sigma && counts.of(p, x).is_zero()) {
            ++x;
        }
        if (x > sigma) {
            return false;
        }
        word_[pos - 1] = x;
        frames_[pos] = frames_[pos - 1];
        frames_[pos].push(x, sigma);
    }
    return true;
}

std::vector<Word> enumerate(std::size_t n, std::size_t k, std::size_t sigma,
                            const BigCount& from_rank, std::optional<std::uint64_t> limit) {
    EnumerationCursor cursor(std::make_shared<const SuffixCountTable>(build_table(n, k, sigma)),
                             from_rank);
    std::vector<Word> out;
    while (!limit || out.size() < *limit) {
        std::optional<Word> w = cursor.next();
        if (!w) {
            break;
        }
        out.push_back(std::move(*w));
    }
    return out;
}

}  // namespace suw
