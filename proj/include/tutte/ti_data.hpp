// Generated by tools/gen_ti_tables.py; do not edit by hand.
#pragma once

#include <array>
#include <utility>

namespace tutte::data {

// Vertices numbered in concentric rings around a pentagon.
inline constexpr int kTruncatedIcosahedronVertices = 60;
inline constexpr std::array<std::pair<int, int>, 90> kTruncatedIcosahedronEdges{{
    {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 5},
    {4, 9}, {5, 10}, {6, 11}, {6, 20}, {7, 12}, {7, 13}, {8, 14}, {8, 15},
    {9, 16}, {9, 17}, {10, 18}, {10, 19}, {11, 12}, {11, 21}, {12, 22}, {13, 14},
    {13, 23}, {14, 24}, {15, 16}, {15, 25}, {16, 26}, {17, 18}, {17, 27}, {18, 28},
    {19, 20}, {19, 29}, {20, 30}, {21, 30}, {21, 31}, {22, 23}, {22, 32}, {23, 33},
    {24, 25}, {24, 34}, {25, 35}, {26, 27}, {26, 36}, {27, 37}, {28, 29}, {28, 38},
    {29, 39}, {30, 40}, {31, 32}, {31, 41}, {32, 42}, {33, 34}, {33, 43}, {34, 44},
    {35, 36}, {35, 45}, {36, 46}, {37, 38}, {37, 47}, {38, 48}, {39, 40}, {39, 49},
    {40, 50}, {41, 50}, {41, 51}, {42, 43}, {42, 51}, {43, 52}, {44, 45}, {44, 52},
    {45, 53}, {46, 47}, {46, 53}, {47, 54}, {48, 49}, {48, 54}, {49, 55}, {50, 55},
    {51, 56}, {52, 57}, {53, 58}, {54, 59}, {55, 60}, {56, 57}, {56, 60}, {57, 58},
    {58, 59}, {59, 60},
}};

// Dual graph: one vertex per face, numbered in concentric rings around the
// top pentagon's face.
inline constexpr int kTruncatedIcosahedronDualVertices = 32;
inline constexpr std::array<std::pair<int, int>, 90> kTruncatedIcosahedronDualEdges{{
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 6}, {2, 7},
    {2, 8}, {2, 12}, {3, 4}, {3, 8}, {3, 9}, {3, 13}, {4, 5}, {4, 9},
    {4, 10}, {4, 14}, {5, 6}, {5, 10}, {5, 11}, {5, 15}, {6, 7}, {6, 11},
    {6, 16}, {7, 12}, {7, 16}, {7, 17}, {8, 12}, {8, 13}, {8, 18}, {9, 13},
    {9, 14}, {9, 19}, {10, 14}, {10, 15}, {10, 20}, {11, 15}, {11, 16}, {11, 21},
    {12, 17}, {12, 18}, {12, 22}, {13, 18}, {13, 19}, {13, 23}, {14, 19}, {14, 20},
    {14, 24}, {15, 20}, {15, 21}, {15, 25}, {16, 17}, {16, 21}, {16, 26}, {17, 22},
    {17, 26}, {17, 27}, {18, 22}, {18, 23}, {18, 28}, {19, 23}, {19, 24}, {19, 29},
    {20, 24}, {20, 25}, {20, 30}, {21, 25}, {21, 26}, {21, 31}, {22, 27}, {22, 28},
    {23, 28}, {23, 29}, {24, 29}, {24, 30}, {25, 30}, {25, 31}, {26, 27}, {26, 31},
    {27, 28}, {27, 31}, {27, 32}, {28, 29}, {28, 32}, {29, 30}, {29, 32}, {30, 31},
    {30, 32}, {31, 32},
}};

}  // namespace tutte::data
