#ifndef WLG_SERIES_HPP
#define WLG_SERIES_HPP

// Constant term of the regularized I-series,
//   I(t) = sum_m (d_0 m)! prod_i (d_i m)! / prod_j (w_j m)! t^{d_0 m},
// and its comparison with the constant terms series of a Laurent polynomial.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "hori_vafa.hpp"
#include "laurent.hpp"
#include "spec.hpp"

namespace wlg {

struct ISeries {
    CISpec spec;
    std::int64_t d0 = 0;
    std::vector<Integer> coefficients; // c_0..c_N

    friend bool operator==(const ISeries&, const ISeries&) = default;
};

inline ISeries i_series(const CISpec& spec, unsigned N)
{
    const auto fano = check_fano(spec);
    if (!fano.is_fano) {
        throw NotFano(to_string(spec) + " is not Fano");
    }
    const auto d0 = *fano.index;
    ISeries out{spec, d0, std::vector<Integer>(N + 1, Integer(0))};

    const auto terms = static_cast<std::int64_t>(N) / d0;
    const auto max_factor = std::max({d0, *std::max_element(spec.degrees().begin(), spec.degrees().end()),
                                      *std::max_element(spec.weights().begin(), spec.weights().end())});
    FactorialTable fact;
    fact.reserve(static_cast<std::size_t>(max_factor * terms));

    for (std::int64_t m = 0; m <= terms; ++m) {
        Integer num = fact.at(static_cast<std::size_t>(d0 * m));
        for (auto d : spec.degrees()) {
            num *= fact.at(static_cast<std::size_t>(d * m));
        }
        Integer den = 1;
        for (auto w : spec.weights()) {
            den *= fact.at(static_cast<std::size_t>(w * m));
        }
        out.coefficients[static_cast<std::size_t>(d0 * m)] = exact_quotient(num, den);
    }
    return out;
}

struct Mismatch {
    std::size_t index = 0;
    Integer expected; // from the I-series
    Integer actual;   // from the constant terms series

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
    /// Largest index through which the two series agree.
    std::int64_t matched_up_to = -1;
    std::optional<Mismatch> first_mismatch;
    bool verdict = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline VerificationReport compare_series(const std::vector<Integer>& expected, const std::vector<Integer>& actual)
{
    VerificationReport r;
    const auto n = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (expected[i] != actual[i]) {
            r.first_mismatch = Mismatch{i, expected[i], actual[i]};
            break;
        }
        r.matched_up_to = static_cast<std::int64_t>(i);
    }
    r.verdict = !r.first_mismatch && expected.size() == actual.size();
    return r;
}

/// Checks that `model` is shaped like a Laurentization of `spec`.
inline void check_legend(const CISpec& spec, const LGModel& model)
{
    const auto& w = spec.weights();
    auto fail = [&](const std::string& why) { throw LegendMismatch(why + " for " + to_string(spec)); };
    if (model.polynomial.num_vars() != spec.dim() - spec.codim() || model.legend.size() != model.polynomial.num_vars()) {
        fail("variable count differs from n - k");
    }
    if (model.charts.size() != spec.codim()) {
        fail("expected one chart index per degree");
    }
    if (model.solved >= w.size() || w[model.solved] != 1) {
        fail("solved index must carry weight 1");
    }
    std::set<std::size_t> used(model.charts.begin(), model.charts.end());
    used.insert(model.solved);
    for (std::size_t v = 0; v < model.legend.size(); ++v) {
        const auto& e = model.legend[v];
        if (e.var != v || e.orig_index >= w.size() || e.block > spec.codim()) {
            fail("malformed legend entry");
        }
        if (e.block == 0 && w[e.orig_index] != 1) {
            fail("free variable of weight other than 1");
        }
        used.insert(e.orig_index);
    }
    if (used.size() != w.size() || std::any_of(model.charts.begin(), model.charts.end(),
                                               [&](std::size_t c) { return c >= w.size(); })) {
        fail("legend, charts and solved index must cover every weight exactly once");
    }
}

inline VerificationReport verify_identity(const CISpec& spec, const LGModel& model, unsigned N,
                                          PeriodOptions options = {})
{
    check_legend(spec, model);
    const auto expected = i_series(spec, N);
    const auto actual = period_sequence(model.polynomial, N, options);
    return compare_series(expected.coefficients, actual.coefficients);
}

} // namespace wlg

#endif // WLG_SERIES_HPP
