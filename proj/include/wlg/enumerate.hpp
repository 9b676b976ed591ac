#ifndef WLG_ENUMERATE_HPP
#define WLG_ENUMERATE_HPP

// Classification sweeps over normalized specs with bounded weight sum.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hori_vafa.hpp"
#include "nef_partition.hpp"
#include "series.hpp"
#include "spec.hpp"

namespace wlg {

/// A smooth Cartier Fano spec without a strong partition.
class PropositionViolation : public Error {
public:
    explicit PropositionViolation(CISpec spec)
        : Error("smooth Cartier Fano spec without a strong Q-nef-partition: " + to_string(spec)),
          spec_(std::move(spec))
    {
    }
    const CISpec& spec() const { return spec_; }

private:
    CISpec spec_;
};

struct RowFlags {
    bool cartier = false;
    bool smooth = false;
    bool relaxed = false;
    bool fano = false;
    bool gorenstein = false;
    bool has_partition = false;
    bool has_strong_partition = false;

    friend bool operator==(const RowFlags&, const RowFlags&) = default;
};

struct EnumerationRow {
    CISpec spec;
    RowFlags flags;
    std::optional<bool> verified;
    std::optional<std::string> error;

    friend bool operator==(const EnumerationRow&, const EnumerationRow&) = default;
};

/// Conjunction of flag requirements such as "smooth,cartier,!relaxed".
class RowFilter {
public:
    RowFilter() = default;

    static RowFilter parse(const std::string& text)
    {
        RowFilter f;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string::npos) {
                end = text.size();
            }
            auto item = text.substr(start, end - start);
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            if (!item.empty()) {
                bool want = true;
                if (item.front() == '!') {
                    want = false;
                    item.erase(0, 1);
                }
                f.terms_.emplace_back(canonical(item), want);
            }
            start = end + 1;
        }
        return f;
    }

    /// +1 when the flag must hold, -1 when it must not, 0 when unconstrained.
    int requirement(const std::string& flag) const
    {
        int r = 0;
        for (const auto& [name, want] : terms_) {
            if (name == flag) {
                r = want ? 1 : -1;
            }
        }
        return r;
    }

    bool accepts(const EnumerationRow& row) const
    {
        for (const auto& [name, want] : terms_) {
            if (value(row, name) != want) {
                return false;
            }
        }
        return true;
    }

private:
    static std::string canonical(const std::string& name)
    {
        if (name == "partition") {
            return "has_partition";
        }
        if (name == "strong" || name == "strong_partition") {
            return "has_strong_partition";
        }
        static const char* known[] = {"cartier", "smooth", "relaxed", "fano", "gorenstein",
                                      "has_partition", "has_strong_partition", "verified"};
        if (std::find(std::begin(known), std::end(known), name) == std::end(known)) {
            throw ParseError("unknown filter flag '" + name + "'");
        }
        return name;
    }

    static bool value(const EnumerationRow& row, const std::string& name)
    {
        const auto& f = row.flags;
        if (name == "cartier") return f.cartier;
        if (name == "smooth") return f.smooth;
        if (name == "relaxed") return f.relaxed;
        if (name == "fano") return f.fano;
        if (name == "gorenstein") return f.gorenstein;
        if (name == "has_partition") return f.has_partition;
        if (name == "has_strong_partition") return f.has_strong_partition;
        return row.verified.value_or(false);
    }

    std::vector<std::pair<std::string, bool>> terms_;
};

struct EnumerateOptions {
    std::int64_t max_weight_sum = 10;
    std::size_t max_k = 1;
    RowFilter filter;
    unsigned verify_N = 0; // 0 skips verification
    unsigned threads = 1;
    std::uint64_t search_budget = default_search_budget;
};

namespace detail {

inline bool weights_normalized(const std::vector<std::int64_t>& w)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (gcd_excluding(w, i) != 1) {
            return false;
        }
    }
    return true;
}

inline void for_each_weight_vector(std::int64_t max_sum, const std::function<void(const std::vector<std::int64_t>&)>& visit)
{
    std::vector<std::int64_t> w;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t min_next, std::int64_t sum) {
        if (w.size() >= 3) {
            visit(w);
        }
        for (std::int64_t v = min_next; sum + v <= max_sum; ++v) {
            w.push_back(v);
            rec(v, sum + v);
            w.pop_back();
        }
    };
    rec(1, 0);
}

inline void for_each_degree_vector(std::size_t k, std::int64_t step, std::int64_t max_sum,
                                   const std::function<void(const std::vector<std::int64_t>&)>& visit)
{
    std::vector<std::int64_t> d;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t min_next, std::int64_t sum) {
        if (d.size() == k) {
            visit(d);
            return;
        }
        const auto left = static_cast<std::int64_t>(k - d.size());
        for (std::int64_t v = min_next; sum + v * left <= max_sum; v += step) {
            d.push_back(v);
            rec(v, sum + v);
            d.pop_back();
        }
    };
    rec(step, 0);
}

} // namespace detail

/// Normalized specs within the bounds, sorted by weights then degrees.
/// Degrees are bounded by sum(d) <= sum(w), which covers every Fano and
/// Calabi-Yau case. Requirements on cartier, smooth and fano in `filter`
/// prune the generation.
inline std::vector<CISpec> candidate_specs(const EnumerateOptions& options)
{
    const auto cartier = options.filter.requirement("cartier") + options.filter.requirement("gorenstein");
    const int smooth = options.filter.requirement("smooth");
    const int fano = options.filter.requirement("fano");
    std::vector<CISpec> out;
    detail::for_each_weight_vector(options.max_weight_sum, [&](const std::vector<std::int64_t>& w) {
        if (!detail::weights_normalized(w)) {
            return;
        }
        const auto sum = std::accumulate(w.begin(), w.end(), std::int64_t{0});
        std::int64_t lcm = 1;
        for (auto v : w) {
            lcm = std::lcm(lcm, v);
        }
        const std::int64_t step = cartier > 0 ? lcm : 1;
        const auto max_degree_sum = fano > 0 ? sum - 1 : sum;
        for (std::size_t k = 1; k <= options.max_k && k + 1 <= w.size() - 1; ++k) {
            if (smooth != 0) {
                const bool s = check_smooth(CISpec(w, std::vector<std::int64_t>(k, 1)));
                if (s != (smooth > 0)) {
                    continue;
                }
            }
            detail::for_each_degree_vector(k, step, max_degree_sum, [&](const std::vector<std::int64_t>& d) {
                out.emplace_back(w, d);
            });
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline EnumerationRow evaluate_row(const CISpec& spec, const EnumerateOptions& options)
{
    EnumerationRow row{spec, {}, std::nullopt, std::nullopt};
    auto& f = row.flags;
    f.cartier = check_cartier(spec);
    f.smooth = check_smooth(spec);
    f.relaxed = check_relaxed(spec);
    f.fano = check_fano(spec).is_fano;
    f.gorenstein = f.cartier;
    PartitionClass pc;
    try {
        pc = find_partition_exhaustive(spec, true, options.search_budget);
    } catch (const SearchBudgetExceeded& e) {
        row.error = e.what();
        return row;
    }
    f.has_partition = pc.has_partition;
    f.has_strong_partition = pc.has_strong_partition;
    if (f.smooth && f.cartier && f.fano && !f.has_strong_partition) {
        throw PropositionViolation(spec);
    }
    if (options.verify_N > 0 && f.fano && f.has_strong_partition) {
        try {
            const auto model = laurentize(build_model(spec, *pc.witness));
            row.verified = verify_identity(spec, model, options.verify_N).verdict;
        } catch (const Error& e) {
            row.verified = false;
            row.error = e.what();
        }
    }
    return row;
}

/// Rows passing the filter, in candidate order regardless of thread count.
inline std::vector<EnumerationRow> enumerate_specs(const EnumerateOptions& options)
{
    const auto specs = candidate_specs(options);
    std::vector<std::optional<EnumerationRow>> rows(specs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (auto i = next++; i < specs.size(); i = next++) {
            try {
                auto row = evaluate_row(specs[i], options);
                if (options.filter.accepts(row)) {
                    rows[i] = std::move(row);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = specs.size();
            }
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<EnumerationRow> out;
    for (auto& r : rows) {
        if (r) {
            out.push_back(std::move(*r));
        }
    }
    return out;
}

} // namespace wlg

#endif // WLG_ENUMERATE_HPP
