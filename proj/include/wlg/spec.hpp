#ifndef WLG_SPEC_HPP
#define WLG_SPEC_HPP

// Complete intersections of degrees d_1..d_k in a weighted projective
// space P(w_0..w_n), and the numeric criteria on (weights; degrees).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace wlg {

class CISpec {
public:
    CISpec(std::vector<std::int64_t> weights, std::vector<std::int64_t> degrees)
        : weights_(std::move(weights)), degrees_(std::move(degrees))
    {
        if (weights_.size() < 2) {
            throw InvalidSpec("need at least two weights");
        }
        if (degrees_.empty()) {
            throw InvalidSpec("need at least one degree");
        }
        if (degrees_.size() + 1 > dim()) {
            throw InvalidSpec("too many degrees: k must be at most n-1");
        }
        auto positive = [](std::int64_t v) { return v >= 1; };
        if (!std::all_of(weights_.begin(), weights_.end(), positive)) {
            throw InvalidSpec("weights must be positive");
        }
        if (!std::all_of(degrees_.begin(), degrees_.end(), positive)) {
            throw InvalidSpec("degrees must be positive");
        }
    }

    const std::vector<std::int64_t>& weights() const { return weights_; }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }

    /// n, the dimension of the ambient space (weights().size() - 1).
    std::size_t dim() const { return weights_.size() - 1; }
    /// k, the number of defining equations.
    std::size_t codim() const { return degrees_.size(); }

    std::int64_t weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}); }
    std::int64_t degree_sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0}); }

    friend bool operator==(const CISpec&, const CISpec&) = default;
    friend auto operator<=>(const CISpec&, const CISpec&) = default;

private:
    std::vector<std::int64_t> weights_;
    std::vector<std::int64_t> degrees_;
};

inline std::string to_string(const CISpec& s)
{
    std::string out = "P(";
    for (std::size_t i = 0; i < s.weights().size(); ++i) {
        out += (i ? "," : "") + std::to_string(s.weights()[i]);
    }
    out += "; ";
    for (std::size_t i = 0; i < s.degrees().size(); ++i) {
        out += (i ? "," : "") + std::to_string(s.degrees()[i]);
    }
    return out + ")";
}

struct SpecReport {
    bool is_normalized = false;
    bool is_cartier = false;
    bool is_smooth = false;
    bool satisfies_relaxed_condition = false;
    bool is_fano = false;
    std::optional<std::int64_t> fano_index;

    friend bool operator==(const SpecReport&, const SpecReport&) = default;
};

namespace detail {

inline std::int64_t gcd_excluding(const std::vector<std::int64_t>& w, std::size_t skip)
{
    std::int64_t g = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j != skip) {
            g = std::gcd(g, w[j]);
        }
    }
    return g;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t v)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) {
                v /= p;
            }
        }
    }
    if (v > 1) {
        out.push_back(v);
    }
    return out;
}

inline std::int64_t smallest_prime_factor(std::int64_t v)
{
    for (std::int64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            return p;
        }
    }
    return v;
}

inline bool is_prime_power(std::int64_t q)
{
    if (q < 2) {
        return false;
    }
    const auto p = smallest_prime_factor(q);
    while (q % p == 0) {
        q /= p;
    }
    return q == 1;
}

inline void divide_degrees(std::vector<std::int64_t>& degrees, std::int64_t g)
{
    for (auto& d : degrees) {
        if (d % g != 0) {
            throw NonIntegralRescale("degree " + std::to_string(d) + " is not divisible by " +
                                     std::to_string(g));
        }
        d /= g;
    }
}

} // namespace detail

/// Reduces to the isomorphic normalized model: weights ascending and every
/// n of the n+1 weights coprime. Degrees are rescaled along with the weights.
inline CISpec normalize(const CISpec& spec)
{
    auto w = spec.weights();
    auto d = spec.degrees();

    // A factor common to all weights is removed from everything first; after
    // that every leave-one-out gcd is coprime to the weight left out.
    const auto total = std::reduce(w.begin(), w.end(), std::int64_t{0},
                                   [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); });
    if (total > 1) {
        for (auto& v : w) {
            v /= total;
        }
        detail::divide_degrees(d, total);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto g = detail::gcd_excluding(w, i);
            if (g > 1) {
                for (std::size_t j = 0; j < w.size(); ++j) {
                    if (j != i) {
                        w[j] /= g;
                    }
                }
                detail::divide_degrees(d, g);
                changed = true;
            }
        }
    }
    std::sort(w.begin(), w.end());
    return CISpec(std::move(w), std::move(d));
}

inline bool is_normalized(const CISpec& spec)
{
    try {
        return normalize(spec) == spec;
    } catch (const NonIntegralRescale&) {
        return false;
    }
}

/// Every weight divides every degree.
inline bool check_cartier(const CISpec& spec)
{
    for (auto d : spec.degrees()) {
        for (auto w : spec.weights()) {
            if (d % w != 0) {
                return false;
            }
        }
    }
    return true;
}

/// Every (k+1)-subset of the weights is coprime. Equivalently, no prime
/// divides more than k of the weights.
inline bool check_smooth(const CISpec& spec)
{
    const auto k = spec.codim();
    std::vector<std::int64_t> primes;
    for (auto w : spec.weights()) {
        for (auto p : detail::prime_factors(w)) {
            primes.push_back(p);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (auto it = primes.begin(); it != primes.end();) {
        auto next = std::upper_bound(it, primes.end(), *it);
        if (static_cast<std::size_t>(next - it) > k) {
            return false;
        }
        it = next;
    }
    return true;
}

/// For every prime power q > 1, the number of weights divisible by q does
/// not exceed the number of degrees divisible by q.
inline bool check_relaxed(const CISpec& spec)
{
    const auto& w = spec.weights();
    const auto max_w = *std::max_element(w.begin(), w.end());
    for (std::int64_t q = 2; q <= max_w; ++q) {
        if (!detail::is_prime_power(q)) {
            continue;
        }
        auto divisible = [q](std::int64_t v) { return v % q == 0; };
        const auto nw = std::count_if(w.begin(), w.end(), divisible);
        const auto nd = std::count_if(spec.degrees().begin(), spec.degrees().end(), divisible);
        if (nw > nd) {
            return false;
        }
    }
    return true;
}

struct FanoResult {
    bool is_fano = false;
    std::optional<std::int64_t> index;
};

inline FanoResult check_fano(const CISpec& spec)
{
    const auto d0 = spec.weight_sum() - spec.degree_sum();
    if (d0 > 0) {
        return {true, d0};
    }
    return {false, std::nullopt};
}

/// Predicates are evaluated on the spec as given.
inline SpecReport make_report(const CISpec& spec)
{
    SpecReport r;
    r.is_normalized = is_normalized(spec);
    r.is_cartier = check_cartier(spec);
    r.is_smooth = check_smooth(spec);
    r.satisfies_relaxed_condition = check_relaxed(spec);
    const auto fano = check_fano(spec);
    r.is_fano = fano.is_fano;
    r.fano_index = fano.index;
    return r;
}

} // namespace wlg

#endif // WLG_SPEC_HPP
