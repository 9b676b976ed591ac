#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wlg/enumerate.hpp"

using wlg::CISpec;

namespace {

wlg::EnumerateOptions options(std::int64_t max_sum, std::size_t max_k, const std::string& filter)
{
    wlg::EnumerateOptions o;
    o.max_weight_sum = max_sum;
    o.max_k = max_k;
    o.filter = wlg::RowFilter::parse(filter);
    return o;
}

const wlg::EnumerationRow* find(const std::vector<wlg::EnumerationRow>& rows, const CISpec& s)
{
    for (const auto& r : rows) {
        if (r.spec == s) return &r;
    }
    return nullptr;
}

} // namespace

TEST(RowFilter, Parse)
{
    const auto f = wlg::RowFilter::parse("smooth, !fano,strong");
    EXPECT_EQ(f.requirement("smooth"), 1);
    EXPECT_EQ(f.requirement("fano"), -1);
    EXPECT_EQ(f.requirement("has_strong_partition"), 1);
    EXPECT_EQ(f.requirement("cartier"), 0);
    EXPECT_THROW(wlg::RowFilter::parse("shiny"), wlg::ParseError);
    EXPECT_EQ(wlg::RowFilter::parse("").requirement("smooth"), 0);
}

TEST(Enumerate, SmoothCartierFanoHaveStrongPartitions)
{
    auto o = options(7, 1, "smooth,cartier,fano");
    o.verify_N = 6;
    const auto rows = wlg::enumerate_specs(o);
    ASSERT_NE(find(rows, CISpec({1, 1, 2, 3}, {6})), nullptr);
    ASSERT_NE(find(rows, CISpec({1, 1, 1, 1}, {3})), nullptr);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.flags.has_strong_partition) << wlg::to_string(r.spec);
        EXPECT_EQ(r.verified, true) << wlg::to_string(r.spec);
        EXPECT_TRUE(wlg::is_normalized(r.spec));
    }
}

TEST(Enumerate, CounterexampleAppears)
{
    const auto rows = wlg::enumerate_specs(options(32, 1, "cartier,fano,!smooth"));
    const auto* r = find(rows, CISpec({1, 6, 10, 15}, {30}));
    ASSERT_NE(r, nullptr);
    EXPECT_FALSE(r->flags.has_partition);
    EXPECT_FALSE(r->flags.has_strong_partition);
    EXPECT_FALSE(r->flags.smooth);
}

TEST(Enumerate, TinyBoundIsEmpty)
{
    EXPECT_TRUE(wlg::enumerate_specs(options(2, 1, "smooth")).empty());
}

TEST(Enumerate, CandidatesAreSortedNormalizedAndComplete)
{
    const auto o = options(9, 2, "");
    const auto specs = wlg::candidate_specs(o);
    EXPECT_TRUE(std::is_sorted(specs.begin(), specs.end()));
    EXPECT_EQ(std::adjacent_find(specs.begin(), specs.end()), specs.end());
    for (const auto& s : specs) {
        EXPECT_TRUE(wlg::is_normalized(s)) << wlg::to_string(s);
        EXPECT_LE(s.degree_sum(), s.weight_sum());
    }
    // Pruned generation agrees with filtering the full candidate list.
    const auto pruned = wlg::candidate_specs(options(9, 2, "smooth,cartier,fano"));
    std::vector<CISpec> filtered;
    for (const auto& s : specs) {
        if (wlg::check_smooth(s) && wlg::check_cartier(s) && wlg::check_fano(s).is_fano) filtered.push_back(s);
    }
    EXPECT_EQ(pruned, filtered);
}

TEST(Enumerate, FlagsMatchOracles)
{
    const auto rows = wlg::enumerate_specs(options(10, 2, ""));
    ASSERT_FALSE(rows.empty());
    for (const auto& r : rows) {
        const auto& w = r.spec.weights();
        const auto& d = r.spec.degrees();
        EXPECT_EQ(r.flags.smooth, oracle::smooth_by_subsets(w, d.size()));
        EXPECT_EQ(r.flags.has_partition, oracle::partition_exists(w, d, false));
        EXPECT_EQ(r.flags.has_strong_partition, oracle::partition_exists(w, d, true));
        EXPECT_EQ(r.flags.fano, r.spec.weight_sum() > r.spec.degree_sum());
    }
}

TEST(Enumerate, DeterministicAcrossThreadCounts)
{
    auto o = options(12, 2, "fano");
    o.verify_N = 0;
    const auto plain = wlg::enumerate_specs(o);
    o.threads = 3;
    EXPECT_EQ(wlg::enumerate_specs(o), plain);

    o = options(8, 2, "fano");
    o.verify_N = 3;
    const auto one = wlg::enumerate_specs(o);
    o.threads = 4;
    EXPECT_EQ(wlg::enumerate_specs(o), one);
}
