#ifndef WLG_HORI_VAFA_HPP
#define WLG_HORI_VAFA_HPP

// Hori-Vafa models of Q-nef-partitioned complete intersections and their
// birational rewriting as a Laurent polynomial on a torus.
//
// For blocks I_1..I_k with chart indices c_i, survivors I_i' = I_i \ {c_i}
// and a solved weight-1 free index s, the Laurent polynomial is
//
//   prod_i (1 + sum_{j in I_i'} y_j)^{d_i}
//   ------------------------------------------------------------  + sum_{free j != s} x_j
//   prod_{free j != s} x_j^{w_j} * prod_i prod_{j in I_i'} y_j^{w_j}

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "nef_partition.hpp"
#include "spec.hpp"

namespace wlg {

struct HoriVafaModel {
    CISpec spec;
    QNefPartition partition;
    /// Exponents of the torus equation prod x_j^{w_j} = 1.
    std::vector<std::int64_t> torus_exponents;
    /// Block equations sum_{j in I_i} x_j = 1, by index set.
    std::vector<IndexSet> block_equations;
    /// The potential is the sum of these variables (after the shift by -k).
    IndexSet potential;
};

inline HoriVafaModel build_model(const CISpec& spec, const QNefPartition& partition)
{
    if (!validate_partition(spec, partition)) {
        throw InvalidPartition("partition does not match " + to_string(spec));
    }
    HoriVafaModel m{spec, partition, spec.weights(), partition.blocks, partition.free};
    for (auto& b : m.block_equations) {
        std::sort(b.begin(), b.end());
    }
    std::sort(m.potential.begin(), m.potential.end());
    return m;
}

struct LegendEntry {
    std::size_t var = 0;
    std::size_t orig_index = 0;
    /// 0 for a free variable, otherwise the 1-based block number.
    std::size_t block = 0;

    friend bool operator==(const LegendEntry&, const LegendEntry&) = default;
};

struct LGModel {
    LaurentPolynomial polynomial{1};
    std::vector<LegendEntry> legend;
    /// Per block, the original index whose coordinate is set to 1.
    std::vector<std::size_t> charts;
    /// The weight-1 free index eliminated through the torus equation.
    std::size_t solved = 0;

    friend bool operator==(const LGModel&, const LGModel&) = default;
};

/// Default chart of a block: its largest weight, ties to the largest index.
inline std::size_t default_chart(const CISpec& spec, const IndexSet& block)
{
    std::size_t best = block.at(0);
    for (auto j : block) {
        const auto wj = spec.weights()[j];
        const auto wb = spec.weights()[best];
        if (wj > wb || (wj == wb && j > best)) {
            best = j;
        }
    }
    return best;
}

/// Laurent form of the model. `charts` overrides the per-block chart index.
inline LGModel laurentize(const HoriVafaModel& model, std::optional<std::vector<std::size_t>> charts = std::nullopt)
{
    const auto& spec = model.spec;
    const auto& w = spec.weights();
    const auto& blocks = model.partition.blocks;
    auto free = model.partition.free;
    std::sort(free.begin(), free.end());

    for (auto j : free) {
        if (w[j] != 1) {
            throw NotStrongPartition("free index " + std::to_string(j) + " has weight " + std::to_string(w[j]) +
                                     "; it cannot be eliminated in Laurent form");
        }
    }
    if (free.empty()) {
        throw NotStrongPartition("no free index is left to solve the torus equation for");
    }

    LGModel out;
    out.solved = free.front();
    if (charts) {
        if (charts->size() != blocks.size()) {
            throw InvalidPartition("one chart index per block is required");
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (std::find(blocks[i].begin(), blocks[i].end(), (*charts)[i]) == blocks[i].end()) {
                throw InvalidPartition("chart index " + std::to_string((*charts)[i]) + " is not in block " +
                                       std::to_string(i + 1));
            }
        }
        out.charts = *charts;
    } else {
        for (const auto& b : blocks) {
            out.charts.push_back(default_chart(spec, b));
        }
    }

    for (std::size_t pos = 1; pos < free.size(); ++pos) {
        out.legend.push_back({out.legend.size(), free[pos], 0});
    }
    std::vector<std::vector<std::size_t>> survivor_vars(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto members = blocks[i];
        std::sort(members.begin(), members.end());
        for (auto j : members) {
            if (j != out.charts[i]) {
                survivor_vars[i].push_back(out.legend.size());
                out.legend.push_back({out.legend.size(), j, i + 1});
            }
        }
    }

    const auto n = out.legend.size();
    if (n + spec.codim() != spec.dim()) {
        throw InvalidPartition("variable count does not match n - k");
    }

    Exponent denominator(n, 0);
    for (const auto& entry : out.legend) {
        denominator[entry.var] = -static_cast<int>(w[entry.orig_index]);
    }
    auto fraction = LaurentPolynomial::monomial(denominator);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto base = LaurentPolynomial::constant(n, 1);
        for (auto v : survivor_vars[i]) {
            base = base + LaurentPolynomial::variable(n, v);
        }
        fraction = fraction * pow(base, static_cast<unsigned>(spec.degrees()[i]));
    }
    auto f = fraction;
    for (const auto& entry : out.legend) {
        if (entry.block == 0) {
            f = f + LaurentPolynomial::variable(n, entry.var);
        }
    }
    out.polynomial = std::move(f);
    return out;
}

} // namespace wlg

#endif // WLG_HORI_VAFA_HPP
