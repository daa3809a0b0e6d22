// Differentials of the two worked examples as dense matrices, rows and
// columns in (state, event tuple) order.

#ifndef TRACEHOM_TESTS_REFERENCE_MATRICES_HPP
#define TRACEHOM_TESTS_REFERENCE_MATRICES_HPP

#include <initializer_list>
#include <vector>

#include "tracehom/smith.hpp"

namespace reference {

using tracehom::Integer;
using Dense = std::vector<std::vector<Integer>>;

inline Dense dense(std::initializer_list<std::initializer_list<int>> rows) {
    Dense out;
    for (auto r : rows)
        out.emplace_back(r.begin(), r.end());
    return out;
}

// Three-generator system.
inline const Dense three_gen_d1 = dense({
    {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, -1, 0, 0, 1, 1, 0, 0, 0, 0},
    {0, -1, 0, 0, -1, 0, 0, 0, 1, 1, 0, 0},
    {0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1},
});
inline const Dense three_gen_d2 = dense({
    {-1, -1, 0, 0, 0, 0},
    {1, 0, -1, 0, 0, 0},
    {0, 1, 1, 0, 0, 0},
    {0, 0, 0, -1, -1, 0},
    {0, 0, 0, 1, 0, -1},
    {0, 0, 0, 0, 1, 1},
    {-1, 0, 0, -1, 0, 0},
    {0, -1, 0, 0, -1, 0},
    {1, 0, 0, 1, 0, 0},
    {0, 0, -1, 0, 0, -1},
    {0, 1, 0, 0, 1, 0},
    {0, 0, 1, 0, 0, 1},
});

// Pipeline with markings in tuple order (0,0,0) < (0,0,1) < ... < (1,1,1).
inline const Dense pipeline_d1 = dense({
    {1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0, -1, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 1, 0, -1, 0, 0, 0},
    {-1, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0},
    {0, -1, 0, 0, 0, 0, 0, 0, 1, 1, -1, 0},
    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, -1},
    {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1},
});
inline const Dense pipeline_d2 = dense({
    {1, 0, 0, 0},
    {-1, 1, 0, 0},
    {1, 0, 0, 0},
    {0, -1, 1, 0},
    {0, 1, 0, 0},
    {0, 0, -1, 0},
    {0, 0, 1, -1},
    {0, 0, 0, 1},
    {0, 0, 0, -1},
    {-1, 0, 0, 1},
    {0, -1, 0, 0},
    {0, 0, -1, 0},
});

}  // namespace reference

#endif  // TRACEHOM_TESTS_REFERENCE_MATRICES_HPP
