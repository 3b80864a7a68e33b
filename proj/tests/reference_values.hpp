// Copyright 2026 The wcpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Four-decimal reference figures used by the tests.

#ifndef WCPOWER_TESTS_REFERENCE_VALUES_HPP
#define WCPOWER_TESTS_REFERENCE_VALUES_HPP

#include <array>

namespace reference {

/// Normalized influence for weights (6, 5, 3), indexed [m - 3][rule][player]
/// with rules in the order P, PR, B, C, S.
inline constexpr double kToyInfluence[3][5][3] = {
    {{0.6667, 0.4444, 0.4444},
     {0.5556, 0.5556, 0.5000},
     {0.6806, 0.5972, 0.3611},
     {0.5509, 0.5509, 0.5509},
     {0.5972, 0.5278, 0.5278}},
    {{0.7500, 0.3750, 0.3750},
     {0.5833, 0.5833, 0.5000},
     {0.7372, 0.6246, 0.3644},
     {0.5851, 0.5851, 0.5851},
     {0.6584, 0.5426, 0.5426}},
    {{0.8000, 0.3200, 0.3200},
     {0.6000, 0.6000, 0.5000},
     {0.7631, 0.6462, 0.3839},
     {0.6098, 0.6098, 0.6098},
     {0.7011, 0.5515, 0.5515}},
};

/// Executive board estimates per member: P pre, P post, PR pre, PR post,
/// C pre, C post. Rows follow the board order of imf_board().
inline constexpr std::array<std::array<double, 6>, 24> kBoardInfluence{{
    {0.7126, 0.7030, 0.6740, 0.6653, 0.6880, 0.6790},
    {0.1986, 0.1989, 0.2239, 0.2233, 0.2164, 0.2159},
    {0.1216, 0.1967, 0.1404, 0.2209, 0.1340, 0.2135},
    {0.2092, 0.1755, 0.2350, 0.1983, 0.2277, 0.1910},
    {0.1851, 0.1720, 0.2097, 0.1950, 0.2024, 0.1876},
    {0.1567, 0.1718, 0.1789, 0.1945, 0.1717, 0.1871},
    {0.1254, 0.1403, 0.1448, 0.1607, 0.1382, 0.1538},
    {0.1349, 0.1337, 0.1551, 0.1533, 0.1482, 0.1465},
    {0.1370, 0.1306, 0.1574, 0.1499, 0.1507, 0.1432},
    {0.1369, 0.1304, 0.1574, 0.1498, 0.1506, 0.1431},
    {0.1114, 0.1226, 0.1291, 0.1410, 0.1230, 0.1345},
    {0.1150, 0.1093, 0.1332, 0.1265, 0.1268, 0.1203},
    {0.1085, 0.1063, 0.1259, 0.1231, 0.1198, 0.1171},
    {0.0932, 0.1044, 0.1088, 0.1209, 0.1032, 0.1149},
    {0.1091, 0.1001, 0.1267, 0.1162, 0.1205, 0.1104},
    {0.0835, 0.0993, 0.0979, 0.1154, 0.0927, 0.1096},
    {0.0898, 0.0988, 0.1048, 0.1147, 0.0993, 0.1089},
    {0.0941, 0.0935, 0.1097, 0.1087, 0.1041, 0.1030},
    {0.0817, 0.0920, 0.0957, 0.1070, 0.0905, 0.1015},
    {0.0874, 0.0823, 0.1024, 0.0962, 0.0970, 0.0910},
    {0.0822, 0.0817, 0.0963, 0.0955, 0.0911, 0.0904},
    {0.0896, 0.0652, 0.1046, 0.0767, 0.0992, 0.0723},
    {0.0465, 0.0526, 0.0555, 0.0621, 0.0521, 0.0584},
    {0.0587, 0.0515, 0.0695, 0.0610, 0.0654, 0.0573},
}};

}  // namespace reference

#endif  // WCPOWER_TESTS_REFERENCE_VALUES_HPP
