#include "prodcol/spancol.hpp"

#include <queue>
#include <string>

#include "prodcol/errors.hpp"

namespace prodcol {

SpanWindow make_window(int s, int delta) {
    if (delta < 1)
        throw InvalidDelta("delta must be >= 1, got " + std::to_string(delta));
    if (s < 0)
        throw InvalidParams("window shift must be >= 0, got " + std::to_string(s));
    SpanWindow w;
    w.s = s;
    w.half_delta = (delta + 1) / 2;
    w.lo = s + 1;
    w.hi = s + w.half_delta;
    w.offsets.reserve(2 * static_cast<std::size_t>(w.half_delta));
    for (int m = w.lo; m <= w.hi; ++m) {
        w.offsets.push_back(m);
        w.offsets.push_back(-m);
    }
    return w;
}

TreeSquareColouring colour_tree_square(const Tree& t, int s) {
    TreeSquareColouring out;
    out.tree = t;
    out.window = make_window(s, max_degree(t));
    out.colours.assign(t.n, 0);
    out.root = 0;

    const auto& offsets = out.window.offsets;
    std::vector<int> parent(t.n, -1);
    std::vector<char> seen(t.n, 0);
    std::queue<int> q;
    q.push(out.root);
    seen[out.root] = 1;

    while (!q.empty()) {
        int v = q.front();
        q.pop();
        // The offset already consumed at v by its own parent edge, seen
        // from v's side. Children must skip it so that siblings and the
        // grandparent direction stay separated.
        std::int64_t parent_offset = 0;
        bool has_parent = parent[v] >= 0;
        if (has_parent)
            parent_offset = out.colours[parent[v]] - out.colours[v];

        std::size_t next = 0;
        for (int w : t.adj[v]) {
            if (seen[w])
                continue;
            while (next < offsets.size() && has_parent &&
                   offsets[next] == parent_offset)
                ++next;
            if (next >= offsets.size())
                throw OffsetExhausted("vertex " + std::to_string(v) +
                                      " ran out of window offsets");
            out.colours[w] = out.colours[v] + offsets[next];
            ++next;
            parent[w] = v;
            seen[w] = 1;
            q.push(w);
        }
    }
    return out;
}

}  // namespace prodcol
