#pragma once

#include <cstdint>
#include <vector>

#include "prodcol/tree.hpp"

namespace prodcol {

// Offsets available to a tree whose window starts after shift s: every
// integer x with |x| in [s+1, s+ceil(delta/2)], ordered
// lo, -lo, lo+1, -(lo+1), ..., hi, -hi.
struct SpanWindow {
    int s = 0;
    int half_delta = 0;
    int lo = 0;
    int hi = 0;
    std::vector<int> offsets;
};

// Throws InvalidDelta when delta < 1 and InvalidParams when s < 0.
SpanWindow make_window(int s, int delta);

struct TreeSquareColouring {
    Tree tree;
    SpanWindow window;
    std::vector<std::int64_t> colours;
    int root = 0;
};

// Colours the square of a tree with integers so that adjacent vertices
// differ by an offset from the window and vertices at distance two differ.
// Root 0 gets colour 0; a top-down sweep hands each child the next offset
// not already used at its parent. OffsetExhausted signals a defect, it
// cannot fire for a valid tree.
TreeSquareColouring colour_tree_square(const Tree& t, int s);

}  // namespace prodcol
