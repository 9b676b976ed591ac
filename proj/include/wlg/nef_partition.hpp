#ifndef WLG_NEF_PARTITION_HPP
#define WLG_NEF_PARTITION_HPP

// Q-nef-partitions: disjoint index blocks I_1..I_k whose weight sums are the
// degrees d_1..d_k. A partition is strong when every index outside the
// blocks carries weight 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "spec.hpp"

namespace wlg {

using IndexSet = std::vector<std::size_t>;

struct QNefPartition {
    std::vector<IndexSet> blocks;
    IndexSet free;

    friend bool operator==(const QNefPartition&, const QNefPartition&) = default;
};

struct PartitionClass {
    bool has_partition = false;
    bool has_strong_partition = false;
    std::optional<QNefPartition> witness;

    friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

inline bool validate_partition(const CISpec& spec, const QNefPartition& p)
{
    const auto size = spec.weights().size();
    if (p.blocks.size() != spec.codim()) {
        return false;
    }
    std::vector<int> seen(size, 0);
    auto mark = [&](const IndexSet& set) {
        for (auto j : set) {
            if (j >= size || seen[j]++ != 0) {
                return false;
            }
        }
        return true;
    };
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (!mark(p.blocks[i])) {
            return false;
        }
        std::int64_t sum = 0;
        for (auto j : p.blocks[i]) {
            sum += spec.weights()[j];
        }
        if (sum != spec.degrees()[i]) {
            return false;
        }
    }
    if (!mark(p.free)) {
        return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

/// All indices outside the blocks have weight 1.
inline bool is_strong(const CISpec& spec, const QNefPartition& p)
{
    return std::all_of(p.free.begin(), p.free.end(), [&](std::size_t j) { return spec.weights()[j] == 1; });
}

inline constexpr std::uint64_t default_search_budget = 100'000'000;

namespace detail {

// Depth-first assignment of indices 0..n to "free" (option 0) or a block
// (options 1..k), in that order. Within a run of equal consecutive weights
// the options are kept non-decreasing; the lexicographically first solution
// always has that shape, so it is still the one returned.
class PartitionSearch {
public:
    PartitionSearch(const CISpec& spec, bool strong, std::uint64_t budget)
        : w_(spec.weights()), targets_(spec.degrees()), strong_(strong), budget_(budget),
          sums_(targets_.size(), 0), choice_(w_.size(), 0), suffix_(w_.size() + 1, 0),
          heavy_suffix_(w_.size() + 1, 0)
    {
        for (std::size_t j = w_.size(); j-- > 0;) {
            suffix_[j] = suffix_[j + 1] + w_[j];
            heavy_suffix_[j] = heavy_suffix_[j + 1] + (w_[j] == 1 ? 0 : w_[j]);
        }
    }

    std::optional<QNefPartition> run()
    {
        if (!descend(0)) {
            return std::nullopt;
        }
        QNefPartition p;
        p.blocks.resize(targets_.size());
        for (std::size_t j = 0; j < w_.size(); ++j) {
            if (choice_[j] == 0) {
                p.free.push_back(j);
            } else {
                p.blocks[choice_[j] - 1].push_back(j);
            }
        }
        return p;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool descend(std::size_t j)
    {
        if (++nodes_ > budget_) {
            throw SearchBudgetExceeded("partition search exceeded " + std::to_string(budget_) + " nodes");
        }
        std::int64_t deficit = 0;
        for (std::size_t i = 0; i < targets_.size(); ++i) {
            deficit += targets_[i] - sums_[i];
        }
        if (deficit > suffix_[j]) {
            return false;
        }
        if (strong_ && heavy_suffix_[j] > deficit) {
            return false;
        }
        if (j == w_.size()) {
            return deficit == 0;
        }
        std::size_t first = 0;
        if (j > 0 && w_[j - 1] == w_[j]) {
            first = choice_[j - 1];
        }
        for (std::size_t option = first; option <= targets_.size(); ++option) {
            if (option == 0) {
                if (strong_ && w_[j] != 1) {
                    continue;
                }
                choice_[j] = 0;
                if (descend(j + 1)) {
                    return true;
                }
                continue;
            }
            auto& sum = sums_[option - 1];
            if (sum + w_[j] > targets_[option - 1]) {
                continue;
            }
            sum += w_[j];
            choice_[j] = option;
            const bool found = descend(j + 1);
            sum -= w_[j];
            if (found) {
                return true;
            }
        }
        return false;
    }

    const std::vector<std::int64_t>& w_;
    const std::vector<std::int64_t>& targets_;
    bool strong_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int64_t> sums_;
    std::vector<std::size_t> choice_;
    std::vector<std::int64_t> suffix_;
    std::vector<std::int64_t> heavy_suffix_;
};

} // namespace detail

/// Complete decision by backtracking. The witness is strong when
/// `require_strong` is set and a strong partition exists; otherwise it is the
/// first partition found.
inline PartitionClass find_partition_exhaustive(const CISpec& spec, bool require_strong,
                                                std::uint64_t budget = default_search_budget)
{
    PartitionClass out;
    auto strong = detail::PartitionSearch(spec, true, budget).run();
    if (strong) {
        out.has_partition = true;
        out.has_strong_partition = true;
        out.witness = require_strong ? std::move(strong) : detail::PartitionSearch(spec, false, budget).run();
        return out;
    }
    auto weak = detail::PartitionSearch(spec, false, budget).run();
    out.has_partition = weak.has_value();
    out.witness = std::move(weak);
    return out;
}

struct ReductionStep {
    std::int64_t prime = 0;
    IndexSet divided; // indices whose weight was divided by `prime`
};

namespace detail {

inline std::vector<ReductionStep> reduce_forward(std::vector<std::int64_t>& w, std::vector<std::int64_t>& d)
{
    std::vector<ReductionStep> steps;
    for (;;) {
        const auto top = std::max_element(w.begin(), w.end()); // first of the largest
        if (*top == 1) {
            return steps;
        }
        ReductionStep step{smallest_prime_factor(*top), {}};
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (w[j] % step.prime == 0) {
                w[j] /= step.prime;
                step.divided.push_back(j);
            }
        }
        for (auto& deg : d) {
            if (deg % step.prime != 0) {
                throw ReductionFailed("degree " + std::to_string(deg) + " not divisible by " +
                                      std::to_string(step.prime));
            }
            deg /= step.prime;
        }
        steps.push_back(std::move(step));
    }
}

} // namespace detail

/// Constructive strong partition for smooth Cartier Fano specs: divide out
/// primes until every weight is 1, split by cardinality, then replay the
/// divisions in reverse while keeping every block sum equal to its degree.
inline QNefPartition find_partition_reduction(const CISpec& spec)
{
    auto w = spec.weights();
    auto d = spec.degrees();
    const auto steps = detail::reduce_forward(w, d);
    const auto size = w.size();
    const auto k = d.size();

    constexpr int free_owner = -1;
    std::vector<int> owner(size, free_owner);
    {
        std::int64_t total = 0;
        for (auto deg : d) {
            total += deg;
        }
        if (total > static_cast<std::int64_t>(size)) {
            throw ReductionFailed("reduced degrees exceed the number of weights");
        }
        std::size_t next = size;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::int64_t c = 0; c < d[i]; ++c) {
                owner[--next] = static_cast<int>(i);
            }
        }
    }

    for (auto step = steps.rbegin(); step != steps.rend(); ++step) {
        const auto p = step->prime;
        std::vector<bool> grows(size, false);
        for (auto j : step->divided) {
            grows[j] = true;
            w[j] *= p;
        }
        for (auto& deg : d) {
            deg *= p;
        }

        std::vector<std::int64_t> deficit(d);
        for (std::size_t j = 0; j < size; ++j) {
            if (owner[j] != free_owner) {
                deficit[owner[j]] -= w[j];
            }
        }
        if (std::any_of(deficit.begin(), deficit.end(), [](std::int64_t x) { return x < 0; })) {
            throw ReductionFailed("block overshoots its degree while replaying p=" + std::to_string(p));
        }

        // Free indices whose weight grows must join a block.
        for (auto j : step->divided) {
            if (owner[j] != free_owner) {
                continue;
            }
            bool placed = false;
            for (std::size_t i = 0; i < k && !placed; ++i) {
                if (deficit[i] >= w[j]) {
                    owner[j] = static_cast<int>(i);
                    deficit[i] -= w[j];
                    placed = true;
                }
            }
            // Otherwise trade places with a weight-1 block member.
            for (std::size_t i = 0; i < k && !placed; ++i) {
                if (deficit[i] < w[j] - 1) {
                    continue;
                }
                for (std::size_t l = 0; l < size; ++l) {
                    if (owner[l] == static_cast<int>(i) && w[l] == 1) {
                        owner[l] = free_owner;
                        owner[j] = static_cast<int>(i);
                        deficit[i] -= w[j] - 1;
                        placed = true;
                        break;
                    }
                }
            }
            if (!placed) {
                throw ReductionFailed("no block can absorb index " + std::to_string(j) + " at p=" +
                                      std::to_string(p));
            }
        }

        // Top up from weight-1 free indices in ascending order.
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < size && deficit[i] > 0; ++j) {
                if (owner[j] == free_owner && w[j] == 1) {
                    owner[j] = static_cast<int>(i);
                    --deficit[i];
                }
            }
            if (deficit[i] != 0) {
                throw ReductionFailed("not enough weight-1 indices to fill block " + std::to_string(i + 1));
            }
        }
    }

    QNefPartition out;
    out.blocks.resize(k);
    for (std::size_t j = 0; j < size; ++j) {
        if (owner[j] == free_owner) {
            out.free.push_back(j);
        } else {
            out.blocks[owner[j]].push_back(j);
        }
    }
    if (!validate_partition(spec, out) || !is_strong(spec, out)) {
        throw ReductionFailed("replay produced an invalid partition for " + to_string(spec));
    }
    return out;
}

enum class PartitionStrategy { exhaustive, reduction };

/// Strong-partition lookup with the chosen strategy. A failed reduction is
/// reported through `on_fallback` and retried exhaustively.
inline PartitionClass find_strong_partition(
    const CISpec& spec, PartitionStrategy strategy, std::uint64_t budget = default_search_budget,
    const std::function<void(const CISpec&, const std::string&)>& on_fallback =
        [](const CISpec& s, const std::string& why) {
            std::clog << "reduction failed for " << to_string(s) << ": " << why
                      << "; falling back to exhaustive search\n";
        })
{
    if (strategy == PartitionStrategy::reduction) {
        try {
            PartitionClass out;
            out.has_partition = true;
            out.has_strong_partition = true;
            out.witness = find_partition_reduction(spec);
            return out;
        } catch (const ReductionFailed& e) {
            if (on_fallback) {
                on_fallback(spec, e.what());
            }
        }
    }
    return find_partition_exhaustive(spec, true, budget);
}

} // namespace wlg

#endif // WLG_NEF_PARTITION_HPP
