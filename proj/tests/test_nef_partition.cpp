#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wlg/nef_partition.hpp"

using wlg::CISpec;
using wlg::QNefPartition;

namespace {

std::multiset<std::int64_t> block_weights(const CISpec& s, const wlg::IndexSet& b)
{
    std::multiset<std::int64_t> out;
    for (auto j : b) {
        out.insert(s.weights()[j]);
    }
    return out;
}

// First assignment in lexicographic order (index 0 most significant, free
// before block 1 before block 2), by plain enumeration.
std::optional<QNefPartition> lex_first(const CISpec& s, bool strong)
{
    const auto n = s.weights().size();
    const auto k = s.codim();
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
        std::vector<std::int64_t> sums(k, 0);
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (digits[j] == 0) {
                ok = ok && (!strong || s.weights()[j] == 1);
            } else {
                sums[digits[j] - 1] += s.weights()[j];
            }
        }
        if (ok && sums == s.degrees()) {
            QNefPartition p;
            p.blocks.resize(k);
            for (std::size_t j = 0; j < n; ++j) {
                (digits[j] == 0 ? p.free : p.blocks[digits[j] - 1]).push_back(j);
            }
            return p;
        }
        std::size_t pos = n;
        while (pos > 0 && ++digits[pos - 1] == k + 1) {
            digits[--pos] = 0;
        }
        if (pos == 0) {
            return std::nullopt;
        }
    }
}

void for_weight_vectors(std::int64_t max_sum, std::size_t max_len,
                        const std::function<void(const std::vector<std::int64_t>&)>& visit)
{
    std::vector<std::int64_t> w;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t min_next, std::int64_t sum) {
        if (w.size() >= 3) {
            visit(w);
        }
        if (w.size() == max_len) {
            return;
        }
        for (std::int64_t v = min_next; sum + v <= max_sum; ++v) {
            w.push_back(v);
            rec(v, sum + v);
            w.pop_back();
        }
    };
    rec(1, 0);
}

} // namespace

TEST(Exhaustive, HypersurfaceOfDegreeSix)
{
    const CISpec s({1, 1, 2, 3}, {6});
    const auto pc = wlg::find_partition_exhaustive(s, true);
    EXPECT_TRUE(pc.has_partition);
    EXPECT_TRUE(pc.has_strong_partition);
    ASSERT_TRUE(pc.witness);
    EXPECT_EQ(pc.witness->blocks, (std::vector<wlg::IndexSet>{{1, 2, 3}}));
    EXPECT_EQ(pc.witness->free, (wlg::IndexSet{0}));
}

TEST(Exhaustive, Counterexamples)
{
    const CISpec a({1, 6, 10, 15}, {30});
    auto pc = wlg::find_partition_exhaustive(a, true);
    EXPECT_FALSE(pc.has_partition);
    EXPECT_FALSE(pc.has_strong_partition);
    EXPECT_FALSE(pc.witness);

    const CISpec b({1, 6, 6, 6, 6, 10, 10, 15}, {30});
    pc = wlg::find_partition_exhaustive(b, true);
    EXPECT_FALSE(pc.has_partition);
    EXPECT_FALSE(oracle::partition_exists(b.weights(), b.degrees(), false));

    const CISpec c({1, 1, 1, 1, 1, 6, 10, 15}, {30});
    pc = wlg::find_partition_exhaustive(c, true);
    EXPECT_TRUE(pc.has_partition);
    EXPECT_FALSE(pc.has_strong_partition);
    ASSERT_TRUE(pc.witness);
    EXPECT_EQ(pc.witness->blocks, (std::vector<wlg::IndexSet>{{0, 1, 2, 3, 4, 6, 7}}));
    EXPECT_EQ(pc.witness->free, (wlg::IndexSet{5}));
    EXPECT_TRUE(wlg::validate_partition(c, *pc.witness));
}

TEST(Exhaustive, BudgetIsEnforced)
{
    const CISpec s({1, 6, 6, 6, 6, 10, 10, 15}, {30});
    EXPECT_THROW(wlg::find_partition_exhaustive(s, true, 5), wlg::SearchBudgetExceeded);
}

TEST(Exhaustive, WitnessPreferenceFollowsFlag)
{
    const CISpec s({1, 1, 1, 2}, {3});
    const auto strong = wlg::find_partition_exhaustive(s, true);
    const auto any = wlg::find_partition_exhaustive(s, false);
    EXPECT_TRUE(strong.has_strong_partition);
    EXPECT_TRUE(any.has_strong_partition);
    EXPECT_TRUE(wlg::is_strong(s, *strong.witness));
    EXPECT_TRUE(wlg::validate_partition(s, *any.witness));
}

TEST(Validate, Examples)
{
    const CISpec s({1, 1, 2, 3}, {6});
    EXPECT_TRUE(wlg::validate_partition(s, {{{1, 2, 3}}, {0}}));
    EXPECT_FALSE(wlg::validate_partition(s, {{{0, 1}}, {2, 3}}));
    EXPECT_TRUE(wlg::validate_partition(CISpec({1, 1, 1, 1}, {3}), {{{0, 1, 2}}, {3}}));
}

TEST(Validate, StructuralFailures)
{
    const CISpec s({1, 1, 2, 3}, {6});
    EXPECT_FALSE(wlg::validate_partition(s, {{{1, 2, 3}}, {}}));        // index 0 uncovered
    EXPECT_FALSE(wlg::validate_partition(s, {{{1, 2, 3}}, {0, 3}}));    // 3 used twice
    EXPECT_FALSE(wlg::validate_partition(s, {{{1, 2, 3}}, {0, 4}}));    // out of range
    EXPECT_FALSE(wlg::validate_partition(s, {{{1, 2, 3}, {}}, {0}}));   // wrong block count
}

TEST(Reduction, Examples)
{
    const CISpec a({1, 1, 2, 3}, {6});
    auto p = wlg::find_partition_reduction(a);
    EXPECT_TRUE(wlg::validate_partition(a, p));
    EXPECT_EQ(block_weights(a, p.blocks[0]), (std::multiset<std::int64_t>{1, 2, 3}));
    ASSERT_EQ(p.free.size(), 1u);
    EXPECT_EQ(a.weights()[p.free[0]], 1);

    const CISpec b({1, 1, 1, 1}, {3});
    p = wlg::find_partition_reduction(b);
    EXPECT_EQ(p.blocks[0], (wlg::IndexSet{1, 2, 3}));
    EXPECT_EQ(p.free, (wlg::IndexSet{0}));

    const CISpec c({1, 1, 1, 2, 2, 4}, {8});
    p = wlg::find_partition_reduction(c);
    EXPECT_TRUE(wlg::validate_partition(c, p));
    EXPECT_TRUE(wlg::is_strong(c, p));
    EXPECT_EQ(block_weights(c, p.blocks[0]), (std::multiset<std::int64_t>{2, 2, 4}));
    EXPECT_TRUE(wlg::find_partition_exhaustive(c, true).has_strong_partition);
}

TEST(Reduction, FailsOnNonCartierAndFallsBack)
{
    const CISpec s({1, 1, 2, 3}, {5}); // 2 does not divide 5
    EXPECT_THROW(wlg::find_partition_reduction(s), wlg::ReductionFailed);
    int fallbacks = 0;
    const auto pc = wlg::find_strong_partition(s, wlg::PartitionStrategy::reduction, wlg::default_search_budget,
                                               [&](const CISpec&, const std::string&) { ++fallbacks; });
    EXPECT_EQ(fallbacks, 1);
    EXPECT_EQ(pc, wlg::find_partition_exhaustive(s, true));
}

TEST(Reduction, CounterexampleHasNoReplay)
{
    EXPECT_THROW(wlg::find_partition_reduction(CISpec({1, 6, 10, 15}, {30})), wlg::ReductionFailed);
}

// Existence agrees with full enumeration on every spec with sum(w) <= 25,
// at most 10 weights, k <= 2 and sum(d) <= sum(w).
TEST(Exhaustive, AgreesWithEnumeration)
{
    std::size_t specs = 0;
    for_weight_vectors(25, 10, [&](const std::vector<std::int64_t>& w) {
        const auto n = w.size();
        const auto sum = std::accumulate(w.begin(), w.end(), std::int64_t{0});
        // Achievable block sums, with and without the strong condition.
        const auto side = static_cast<std::size_t>(sum + 1);
        std::vector<char> any1(side), strong1(side), any2(side * side), strong2(side * side);
        std::vector<std::size_t> digits(n, 0);
        for (;;) {
            std::int64_t s1 = 0, s2 = 0;
            bool free_ones = true, uses_two = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (digits[j] == 0) {
                    free_ones = free_ones && w[j] == 1;
                } else if (digits[j] == 1) {
                    s1 += w[j];
                } else {
                    s2 += w[j];
                    uses_two = true;
                }
            }
            if (!uses_two) {
                any1[s1] = 1;
                strong1[s1] |= free_ones;
            }
            any2[s1 * side + s2] = 1;
            strong2[s1 * side + s2] |= free_ones;
            std::size_t pos = n;
            while (pos > 0 && ++digits[pos - 1] == 3) {
                digits[--pos] = 0;
            }
            if (pos == 0) break;
        }
        for (std::int64_t a = 1; a <= sum; ++a) {
            const CISpec s1(w, {a});
            const auto pc = wlg::find_partition_exhaustive(s1, true);
            ASSERT_EQ(pc.has_partition, any1[a] != 0) << wlg::to_string(s1);
            ASSERT_EQ(pc.has_strong_partition, strong1[a] != 0) << wlg::to_string(s1);
            if (pc.witness) {
                ASSERT_TRUE(wlg::validate_partition(s1, *pc.witness));
            }
            ++specs;
            if (n > 3) {
                for (std::int64_t b = 1; a + b <= sum; ++b) {
                    const CISpec s2(w, {a, b});
                    const auto pc2 = wlg::find_partition_exhaustive(s2, true);
                    ASSERT_EQ(pc2.has_partition, any2[a * side + b] != 0) << wlg::to_string(s2);
                    ASSERT_EQ(pc2.has_strong_partition, strong2[a * side + b] != 0) << wlg::to_string(s2);
                    if (pc2.witness) {
                        ASSERT_TRUE(wlg::validate_partition(s2, *pc2.witness));
                    }
                    ++specs;
                }
            }
        }
    });
    EXPECT_GT(specs, 100000u);
}

TEST(Exhaustive, WitnessIsLexicographicallyFirst)
{
    for_weight_vectors(14, 7, [&](const std::vector<std::int64_t>& w) {
        const auto sum = std::accumulate(w.begin(), w.end(), std::int64_t{0});
        for (std::int64_t a = 1; a <= sum; ++a) {
            for (std::int64_t b = 0; a + b <= sum && (b == 0 || w.size() > 3); ++b) {
                const CISpec s(w, b == 0 ? std::vector<std::int64_t>{a} : std::vector<std::int64_t>{a, b});
                for (bool strong : {true, false}) {
                    auto got = wlg::find_partition_exhaustive(s, strong);
                    auto want = lex_first(s, strong);
                    if (strong && !got.has_strong_partition) {
                        ASSERT_FALSE(want) << wlg::to_string(s);
                        continue;
                    }
                    ASSERT_EQ(got.witness, want) << wlg::to_string(s) << " strong=" << strong;
                }
            }
        }
    });
}

// Smooth Cartier Fano specs always admit a strong partition, the reduction
// replay finds one, and at least d0 + 1 weights equal 1 unless some degree
// equals some weight. In that linear-cone case the bound can fail, e.g. a
// quadric in P(1,1,2) is a line with d0 = 2 and two unit weights.
TEST(Reduction, PropositionSweep)
{
    std::size_t swept = 0;
    std::size_t cones_below_bound = 0;
    bool equality_seen = false;
    for_weight_vectors(25, 25, [&](const std::vector<std::int64_t>& w) {
        const auto sum = std::accumulate(w.begin(), w.end(), std::int64_t{0});
        std::int64_t lcm = 1;
        for (auto v : w) lcm = std::lcm(lcm, v);
        for (std::size_t k = 1; k <= 2 && k + 1 < w.size(); ++k) {
            for (std::int64_t a = lcm; a < sum; a += lcm) {
                for (std::int64_t b = (k == 2 ? a : 0); (k == 1 && b == 0) || (k == 2 && a + b < sum); b += lcm) {
                    const CISpec s(w, k == 1 ? std::vector<std::int64_t>{a} : std::vector<std::int64_t>{a, b});
                    if (!wlg::check_smooth(s)) {
                        break;
                    }
                    ASSERT_TRUE(wlg::check_cartier(s) && wlg::check_fano(s).is_fano);
                    ++swept;
                    const auto pc = wlg::find_partition_exhaustive(s, true);
                    ASSERT_TRUE(pc.has_strong_partition) << wlg::to_string(s);
                    QNefPartition p;
                    ASSERT_NO_THROW(p = wlg::find_partition_reduction(s)) << wlg::to_string(s);
                    ASSERT_TRUE(wlg::validate_partition(s, p)) << wlg::to_string(s);
                    ASSERT_TRUE(wlg::is_strong(s, p)) << wlg::to_string(s);
                    const auto ones = std::count(w.begin(), w.end(), 1);
                    const auto d0 = *wlg::check_fano(s).index;
                    const bool cone = std::any_of(s.degrees().begin(), s.degrees().end(), [&](std::int64_t d) {
                        return std::find(w.begin(), w.end(), d) != w.end();
                    });
                    if (cone && ones < d0 + 1) {
                        ++cones_below_bound;
                    } else {
                        ASSERT_GE(ones, d0 + 1) << wlg::to_string(s);
                    }
                    if (s == CISpec({1, 1, 2, 3}, {6})) {
                        equality_seen = ones == d0 + 1;
                    }
                    if (k == 1) break;
                }
            }
        }
    });
    EXPECT_TRUE(equality_seen);
    EXPECT_GT(swept, 500u);
    EXPECT_GT(cones_below_bound, 0u);
}
