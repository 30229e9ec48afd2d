// Copyright 2026 The Quadforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <map>
#include <utility>

namespace quadforge::reference {

// Reference counts for n = s + u <= 10.

/// q(n), n = 3..10.
inline const std::map<int, long> kQuadrangulations = {
    {3, 1}, {4, 3}, {5, 7}, {6, 30}, {7, 124}, {8, 733}, {9, 4586}, {10, 33373},
};

/// e_SD(n) for even n; odd n have none.
inline const std::map<int, long> kSelfDual = {
    {4, 2}, {6, 8}, {8, 50}, {10, 380},
};

/// sum_s e(s, n - s), n = 3..10.
inline const std::map<int, long> kSecondaryTotals = {
    {3, 2}, {4, 4}, {5, 14}, {6, 52}, {7, 248}, {8, 1416}, {9, 9172}, {10, 66366},
};

/// e(s, u) indexed [u - 1][s - 1], zero where s + u > 10.
inline constexpr std::array<std::array<long, 9>, 9> kSecondaryGrid = {{
    {1, 1, 1, 2, 3, 6, 12, 27, 65},
    {1, 2, 5, 13, 35, 104, 315, 1021, 0},
    {1, 5, 20, 83, 340, 1401, 5809, 0, 0},
    {2, 13, 83, 504, 2843, 15578, 0, 0, 0},
    {3, 35, 340, 2843, 21420, 0, 0, 0, 0},
    {6, 104, 1401, 15578, 0, 0, 0, 0, 0},
    {12, 315, 5809, 0, 0, 0, 0, 0, 0},
    {27, 1021, 0, 0, 0, 0, 0, 0, 0},
    {65, 0, 0, 0, 0, 0, 0, 0, 0},
}};

inline long secondary(int s, int u) { return kSecondaryGrid[u - 1][s - 1]; }

/// Reference contractibility rows, in column order
/// (1-2-contractible, 2-irreducible, 1-irreducible, irreducible), n = 4..10.
inline const std::map<int, std::array<long, 4>> kContractibility = {
    {4, {0, 3, 1, 0}},
    {5, {6, 2, 6, 0}},
    {6, {32, 4, 16, 0}},
    {7, {172, 10, 66, 0}},
    {8, {1071, 33, 311, 1}},
    {9, {7370, 114, 1688, 0}},
    {10, {55766, 474, 10125, 1}},
};

}  // namespace quadforge::reference
