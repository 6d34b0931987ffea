#pragma once

// Reference classification data for the two fixture signatures:
//   - (4,4)-curves in P^1 x P^1 (tables 1-2)
//   - (1,2)-divisors in P^1 x P^3 (tables 3-4)
// Monomials are concatenated exponent tuples; weight vectors are flat.

#include <vector>

namespace fixtures {

// (1,1|4,4): the full fundamental set (13 primitive normalised subgroups).
inline const std::vector<std::vector<int>> kFundamental44 = {
    {1, -1, 0, 0},  {0, 0, 1, -1},  {1, -1, 1, -1}, {2, -2, 1, -1}, {1, -1, 2, -2},
    {3, -3, 1, -1}, {1, -1, 3, -3}, {4, -4, 1, -1}, {1, -1, 4, -4}, {3, -3, 2, -2},
    {2, -2, 3, -3}, {4, -4, 3, -3}, {3, -3, 4, -4},
};

// (1,1|4,4) named subgroups.
inline const std::vector<std::vector<int>> kLambda44 = {
    {1, -1, 0, 0}, {1, -1, 1, -1}, {2, -2, 1, -1}, {3, -3, 1, -1}, {3, -3, 2, -2},
};

// (1,3|1,2) named subgroups (the five reference members).
inline const std::vector<std::vector<int>> kLambda12 = {
    {0, 0, 1, 1, -1, -1}, {2, -2, 1, 1, -1, -1}, {2, -2, 1, 1, 1, -3},
    {0, 0, 1, 0, 0, -1},  {2, -2, 3, -1, -1, -1},
};

inline const std::vector<std::vector<std::vector<int>>> kTable1 = {
    {{4,0,4,0}, {4,0,3,1}, {4,0,2,2}, {4,0,1,3}, {4,0,0,4}, {3,1,4,0}, {3,1,3,1}, {3,1,2,2}, {3,1,1,3}, {3,1,0,4}, {2,2,4,0}, {2,2,3,1}, {2,2,2,2}, {2,2,1,3}, {2,2,0,4}},
    {{4,0,4,0}, {4,0,3,1}, {4,0,2,2}, {4,0,1,3}, {4,0,0,4}, {3,1,4,0}, {3,1,3,1}, {3,1,2,2}, {3,1,1,3}, {2,2,4,0}, {2,2,3,1}, {2,2,2,2}, {1,3,4,0}, {1,3,3,1}, {0,4,4,0}},
    {{4,0,4,0}, {4,0,3,1}, {4,0,2,2}, {4,0,1,3}, {4,0,0,4}, {3,1,4,0}, {3,1,3,1}, {3,1,2,2}, {3,1,1,3}, {3,1,0,4}, {2,2,4,0}, {2,2,3,1}, {2,2,2,2}, {1,3,4,0}},
    {{4,0,4,0}, {4,0,3,1}, {4,0,2,2}, {4,0,1,3}, {4,0,0,4}, {3,1,4,0}, {3,1,3,1}, {3,1,2,2}, {3,1,1,3}, {3,1,0,4}, {2,2,4,0}, {2,2,3,1}},
    {{4,0,4,0}, {4,0,3,1}, {4,0,2,2}, {4,0,1,3}, {4,0,0,4}, {3,1,4,0}, {3,1,3,1}, {3,1,2,2}, {3,1,1,3}, {2,2,4,0}, {2,2,3,1}, {1,3,4,0}},
};

inline const std::vector<std::vector<std::vector<int>>> kTable2 = {
    {{2,2,4,0}, {2,2,3,1}, {2,2,2,2}, {2,2,1,3}, {2,2,0,4}},
    {{0,4,4,0}, {1,3,3,1}, {2,2,2,2}, {3,1,1,3}, {4,0,0,4}},
    {{1,3,4,0}, {3,1,0,4}, {2,2,2,2}},
};

inline const std::vector<std::vector<std::vector<int>>> kTable3 = {
    {{1,0,2,0,0,0}, {1,0,1,1,0,0}, {1,0,1,0,1,0}, {1,0,1,0,0,1}, {1,0,0,2,0,0}, {1,0,0,1,1,0}, {1,0,0,1,0,1}, {0,1,2,0,0,0}, {0,1,1,1,0,0}, {0,1,1,0,1,0}, {0,1,1,0,0,1}, {0,1,0,2,0,0}, {0,1,0,1,1,0}, {0,1,0,1,0,1}},
    {{1,0,2,0,0,0}, {1,0,1,1,0,0}, {1,0,1,0,1,0}, {1,0,1,0,0,1}, {1,0,0,2,0,0}, {1,0,0,1,1,0}, {1,0,0,1,0,1}, {1,0,0,0,2,0}, {1,0,0,0,1,1}, {1,0,0,0,0,2}, {0,1,2,0,0,0}, {0,1,1,1,0,0}, {0,1,0,2,0,0}},
    {{1,0,2,0,0,0}, {1,0,1,1,0,0}, {1,0,1,0,1,0}, {1,0,1,0,0,1}, {1,0,0,2,0,0}, {1,0,0,1,1,0}, {1,0,0,1,0,1}, {1,0,0,0,2,0}, {1,0,0,0,1,1}, {0,1,2,0,0,0}, {0,1,1,1,0,0}, {0,1,1,0,1,0}, {0,1,0,2,0,0}, {0,1,0,1,1,0}, {0,1,0,0,2,0}},
    {{1,0,2,0,0,0}, {1,0,1,1,0,0}, {1,0,1,0,1,0}, {1,0,1,0,0,1}, {1,0,0,2,0,0}, {1,0,0,1,1,0}, {1,0,0,0,2,0}, {0,1,2,0,0,0}, {0,1,1,1,0,0}, {0,1,1,0,1,0}, {0,1,1,0,0,1}, {0,1,0,2,0,0}, {0,1,0,1,1,0}, {0,1,0,0,2,0}},
    {{1,0,2,0,0,0}, {1,0,1,1,0,0}, {1,0,1,0,1,0}, {1,0,1,0,0,1}, {1,0,0,2,0,0}, {1,0,0,1,1,0}, {1,0,0,1,0,1}, {1,0,0,0,2,0}, {1,0,0,0,1,1}, {1,0,0,0,0,2}, {0,1,2,0,0,0}, {0,1,1,1,0,0}, {0,1,1,0,1,0}, {0,1,1,0,0,1}},
};

inline const std::vector<std::vector<std::vector<int>>> kTable4 = {
    {{1,0,0,1,0,1}, {1,0,0,1,1,0}, {1,0,1,0,0,1}, {1,0,1,0,1,0}, {0,1,0,1,0,1}, {0,1,0,1,1,0}, {0,1,1,0,0,1}, {0,1,1,0,1,0}},
    {{1,0,0,0,0,2}, {1,0,0,0,1,1}, {1,0,0,0,2,0}, {0,1,0,2,0,0}, {0,1,1,1,0,0}, {0,1,2,0,0,0}},
    {{1,0,0,0,1,1}, {1,0,0,1,0,1}, {1,0,1,0,0,1}, {0,1,0,0,2,0}, {0,1,0,1,1,0}, {0,1,0,2,0,0}, {0,1,1,0,1,0}, {0,1,1,1,0,0}, {0,1,2,0,0,0}},
    {{1,0,0,0,2,0}, {1,0,0,1,1,0}, {1,0,0,2,0,0}, {1,0,1,0,0,1}, {0,1,0,0,2,0}, {0,1,0,1,1,0}, {0,1,0,2,0,0}, {0,1,1,0,0,1}},
    {{1,0,0,0,0,2}, {1,0,0,0,1,1}, {1,0,0,0,2,0}, {1,0,0,1,0,1}, {1,0,0,1,1,0}, {1,0,0,2,0,0}, {0,1,1,0,0,1}, {0,1,1,0,1,0}, {0,1,1,1,0,0}},
};

}  // namespace fixtures
