#ifndef WLG_POLYTOPE_HPP
#define WLG_POLYTOPE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "detail/simplex.hpp"
#include "errors.hpp"
#include "laurent.hpp"

namespace wlg {

struct Polytope {
    std::vector<Exponent> vertices; // lexicographic order

    friend bool operator==(const Polytope&, const Polytope&) = default;
};

/// True iff `point` is a convex combination of `points`.
inline bool in_convex_hull(const Exponent& point, const std::vector<Exponent>& points)
{
    if (points.empty()) {
        return false;
    }
    const auto dim = point.size();
    std::vector<std::vector<mpq_class>> a(dim + 1, std::vector<mpq_class>(points.size()));
    std::vector<mpq_class> b(dim + 1);
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            a[c][j] = points[j][c];
        }
        b[c] = point[c];
    }
    for (std::size_t j = 0; j < points.size(); ++j) {
        a[dim][j] = 1;
    }
    b[dim] = 1;
    return detail::feasible_nonnegative(a, b);
}

/// Vertices of the convex hull of supp(f).
inline Polytope newton_polytope(const LaurentPolynomial& f)
{
    if (f.is_zero()) {
        throw EmptyPolynomial("the zero polynomial has no Newton polytope");
    }
    std::vector<Exponent> candidates;
    candidates.reserve(f.size());
    for (const auto& t : f.terms()) {
        candidates.push_back(t.exps);
    }
    // Dropping a point inside the hull of the others leaves the hull
    // unchanged, so each test can run against the shrinking candidate set.
    // The lexicographic extremes are always vertices.
    for (std::size_t i = 1; i + 1 < candidates.size();) {
        auto point = candidates[i];
        auto others = candidates;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        if (in_convex_hull(point, others)) {
            candidates = std::move(others);
        } else {
            ++i;
        }
    }
    return Polytope{std::move(candidates)};
}

} // namespace wlg

#endif // WLG_POLYTOPE_HPP
