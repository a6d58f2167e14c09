#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace prodcol {

using Edge = std::pair<int, int>;

// Connected acyclic graph on vertices 0..n-1 with n >= 2. Edges are stored
// normalized as (min, max) and sorted; neighbour lists are sorted ascending,
// so every downstream sweep is deterministic.
struct Tree {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool operator==(const Tree& other) const {
        return n == other.n && edges == other.edges;
    }
};

// Validates and canonicalizes an edge list. Throws SelfLoop, DuplicateEdge,
// TooSmall (empty edge list), Disconnected, or CycleDetected.
Tree tree_from_edges(std::span<const Edge> edges);
Tree tree_from_edges(std::initializer_list<Edge> edges);

int max_degree(const Tree& t);

enum class TreeKind { Path, Star, Caterpillar, Random };

struct GenerateParams {
    TreeKind kind = TreeKind::Path;
    int n = 0;                  // path, star, random: vertex count
    int spine = 0;              // caterpillar: spine length
    int legs = 0;               // caterpillar: legs per spine vertex
    std::uint64_t seed = 0;     // random
};

// Deterministic family generators. Path: 0-1-..-(n-1). Star: centre 0 with
// leaves 1..n-1. Caterpillar: spine path 0..spine-1, leg j of spine vertex i
// is vertex spine + i*legs + j. Random: uniform labelled tree drawn from a
// seeded Prufer sequence. Throws InvalidParams on bad sizes.
Tree generate(const GenerateParams& p);

// Decodes a Prufer sequence into the unique labelled tree on n vertices.
// seq must have length n-2 with entries in [0, n).
Tree prufer_decode(int n, std::span<const int> seq);

// Text format: one "u v" edge per line, '#' starts a comment line, blank
// lines separate tree blocks. parse_tree expects exactly one block;
// write_tree emits edges sorted by (min, max), '\n' terminated.
Tree parse_tree(std::istream& in);
void write_tree(std::ostream& out, const Tree& t);

namespace detail {
// Shared by the tree and product-instance readers. Line numbers in
// ParseError messages are 1-based over the whole stream.
std::vector<std::vector<Edge>> parse_edge_blocks(std::istream& in);
}

}  // namespace prodcol
