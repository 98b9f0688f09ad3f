#include "dualham/reference_drawings.hpp"

#include <algorithm>
#include <vector>

#include "dualham/errors.hpp"

namespace dualham::drawings {

namespace {

Color cell_color(char ch) {
    if (ch == 'G') return Color::red;
    if (ch == 'B') return Color::blue;
    throw invalid_input(std::string("drawing: bad cell '") + ch + "'");
}

Vertex ladder_vertex(char corner, int column) {
    auto it = std::find(kLadderCorners.begin(), kLadderCorners.end(), corner);
    if (it == kLadderCorners.end()) throw invalid_input("drawing: bad ladder corner");
    return 4 * column + kLadderCornerId[it - kLadderCorners.begin()];
}

template <typename Mark, typename Locate>
Quartet quartet_from_marks(std::span<const Mark> marks, Locate locate) {
    Quartet q;
    int seen = 0;
    for (const auto& mark : marks) {
        Vertex v = locate(mark);
        if (mark.label == "i1") q.i_red = v;
        else if (mark.label == "i2") q.i_blue = v;
        else if (mark.label == "j1") q.j_red = v;
        else if (mark.label == "j2") q.j_blue = v;
        else throw invalid_input("drawing: unknown mark label");
        ++seen;
    }
    if (seen != 4) throw invalid_input("drawing: expected four marks");
    return q;
}

}  // namespace

TwoColoring grid_drawing_coloring(std::span<const std::string_view> rows) {
    std::vector<Color> colors;
    for (auto row : rows) {
        if (row.size() != rows.front().size()) throw invalid_input("drawing: ragged grid");
        for (char ch : row) colors.push_back(cell_color(ch));
    }
    return TwoColoring(std::move(colors));
}

Quartet grid_marks_quartet(std::span<const GridMark> marks, int columns) {
    return quartet_from_marks(marks, [columns](const GridMark& m) { return m.row * columns + m.col; });
}

TwoColoring ladder_drawing_coloring() {
    const int columns = static_cast<int>(kLadderDrawing.front().size());
    std::vector<Color> colors(4 * columns);
    for (std::size_t k = 0; k < kLadderCorners.size(); ++k) {
        for (int c = 0; c < columns; ++c) {
            colors[ladder_vertex(kLadderCorners[k], c)] = cell_color(kLadderDrawing[k][c]);
        }
    }
    return TwoColoring(std::move(colors));
}

Quartet ladder_marks_quartet() {
    return quartet_from_marks(std::span<const LadderMark>(kLadderMarks),
                              [](const LadderMark& m) { return ladder_vertex(m.corner, m.column); });
}

}  // namespace dualham::drawings
