#ifndef WLG_TESTS_FIXTURES_HPP
#define WLG_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "wlg/spec.hpp"

namespace fixtures {

struct Named {
    std::string name;
    wlg::CISpec spec;
};

inline wlg::CISpec cubic_surface() { return {{1, 1, 1, 1}, {3}}; }
inline wlg::CISpec quartic_threefold() { return {{1, 1, 1, 1, 1}, {4}}; }
inline wlg::CISpec sextic_double_cone() { return {{1, 1, 2, 3}, {6}}; }
inline wlg::CISpec two_quadrics() { return {{1, 1, 1, 1, 1, 1}, {2, 2}}; }

/// Smooth Cartier Fano specs with strong partitions.
inline std::vector<Named> mirror_fixtures()
{
    return {
        {"cubic surface", cubic_surface()},
        {"quartic threefold", quartic_threefold()},
        {"sextic in P(1,1,2,3)", sextic_double_cone()},
        {"two quadrics in P^5", two_quadrics()},
        {"quartic in P(1,1,1,1,2)", {{1, 1, 1, 1, 2}, {4}}},
        {"sextic in P(1,1,1,2,3)", {{1, 1, 1, 2, 3}, {6}}},
        {"(4,2) in P(1,1,1,1,1,2,2)", {{1, 1, 1, 1, 1, 2, 2}, {2, 4}}},
    };
}

} // namespace fixtures

#endif // WLG_TESTS_FIXTURES_HPP
