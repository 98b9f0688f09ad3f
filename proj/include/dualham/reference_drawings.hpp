#pragma once

// Hand transcriptions of the published seed drawings, kept as data so they
// can be audited cell by cell. 'G' is a gray vertex (red), 'B' a black one
// (blue). A label ending in 1 marks the red member of its pair and one ending
// in 2 the blue member; i* labels form I and j* labels form J.

#include <array>
#include <span>
#include <string_view>

#include "dualham/coloring.hpp"
#include "dualham/graph.hpp"

namespace dualham::drawings {

// Cube ladder P1 × P1 × P5: six square columns, corners a-b-c-d-a.
// Corner k of column c is vertex 4c + kLadderCornerId[k] of grid({1,1,n}).
inline constexpr std::array<char, 4> kLadderCorners = {'a', 'b', 'c', 'd'};
inline constexpr std::array<Vertex, 4> kLadderCornerId = {0, 1, 3, 2};
inline constexpr std::array<std::string_view, 4> kLadderDrawing = {
    "GBBBBB",  // a1 .. a6
    "GBGBGB",  // b1 .. b6
    "GGGGGG",  // c1 .. c6
    "BBGBGB",  // d1 .. d6
};

struct LadderMark {
    std::string_view label;
    char corner;
    int column;  // 0-based
};

inline constexpr std::array<LadderMark, 4> kLadderMarks = {{
    {"i1", 'c', 1},
    {"i2", 'b', 1},
    {"j1", 'c', 0},
    {"j2", 'd', 0},
}};

// Grids, drawn top row first. Cell (row, col) is vertex row * (m + 1) + col
// of grid({m, n}), with m + 1 columns and n + 1 rows.
struct GridMark {
    std::string_view label;
    int row;
    int col;
};

// P4 × P5 (5 columns, 6 rows).
inline constexpr std::array<std::string_view, 6> kGrid4x5Drawing = {
    "GBBBB",
    "GGGGB",
    "GBBBB",
    "GGGGB",
    "GBBBB",
    "GGGGB",
};
// Marks exactly as drawn. j2 at (1, 4) makes the red class of C Δ J a single
// component through i1 and j2, so this labelling is not a quartet.
inline constexpr std::array<GridMark, 4> kGrid4x5MarksAsDrawn = {{
    {"i1", 0, 0},
    {"i2", 5, 4},
    {"j1", 2, 0},
    {"j2", 1, 4},
}};
// j2 moved down the last column to (3, 4), the nearest placement that
// verifies.
inline constexpr std::array<GridMark, 4> kGrid4x5Marks = {{
    {"i1", 0, 0},
    {"i2", 5, 4},
    {"j1", 2, 0},
    {"j2", 3, 4},
}};

// P4 × P6 (5 columns, 7 rows).
inline constexpr std::array<std::string_view, 7> kGrid4x6Drawing = {
    "BBBBB",
    "GGGGB",
    "GBBBB",
    "GGGGB",
    "GBBBB",
    "GGGGB",
    "GBBBB",
};
inline constexpr std::array<GridMark, 4> kGrid4x6Marks = {{
    {"i1", 6, 0},
    {"i2", 0, 0},
    {"j1", 2, 0},
    {"j2", 1, 4},
}};

// Coloring of grid({m, n}) given as drawn rows.
TwoColoring grid_drawing_coloring(std::span<const std::string_view> rows);
// Quartet from marks on a grid with `columns` columns.
Quartet grid_marks_quartet(std::span<const GridMark> marks, int columns);

// Coloring of grid({1, 1, 5}) and the quartet, from the ladder tables.
TwoColoring ladder_drawing_coloring();
Quartet ladder_marks_quartet();

}  // namespace dualham::drawings
