#include "prodcol/tree.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>

#include "prodcol/errors.hpp"

namespace prodcol {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Tree tree_from_edges(std::span<const Edge> edges) {
    if (edges.empty())
        throw TooSmall("no edges; a tree needs at least two vertices");

    int max_index = 0;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0)
            throw InvalidParams("negative vertex index in edge " + edge_str(u, v));
        if (u == v)
            throw SelfLoop("edge " + edge_str(u, v));
        max_index = std::max({max_index, u, v});
    }

    Tree t;
    t.n = max_index + 1;
    t.edges.reserve(edges.size());
    for (const auto& [u, v] : edges)
        t.edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(t.edges.begin(), t.edges.end());
    for (std::size_t i = 1; i < t.edges.size(); ++i)
        if (t.edges[i] == t.edges[i - 1])
            throw DuplicateEdge("edge " + edge_str(t.edges[i].first, t.edges[i].second));

    t.adj.assign(t.n, {});
    for (const auto& [u, v] : t.edges) {
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    for (auto& row : t.adj)
        std::sort(row.begin(), row.end());

    std::vector<char> seen(t.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached < t.n) {
        int missing = 0;
        while (seen[missing]) ++missing;
        throw Disconnected("vertex " + std::to_string(missing) +
                           " is not reachable from vertex 0");
    }

    if (t.edges.size() != static_cast<std::size_t>(t.n) - 1)
        throw CycleDetected(std::to_string(t.edges.size()) + " edges on " +
                            std::to_string(t.n) + " connected vertices");
    return t;
}

Tree tree_from_edges(std::initializer_list<Edge> edges) {
    return tree_from_edges(std::span<const Edge>(edges.begin(), edges.size()));
}

int max_degree(const Tree& t) {
    int best = 0;
    for (int v = 0; v < t.n; ++v)
        best = std::max(best, t.degree(v));
    return best;
}

Tree generate(const GenerateParams& p) {
    switch (p.kind) {
    case TreeKind::Path: {
        if (p.n < 2)
            throw InvalidParams("path needs n >= 2, got " + std::to_string(p.n));
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < p.n; ++i)
            edges.emplace_back(i, i + 1);
        return tree_from_edges(edges);
    }
    case TreeKind::Star: {
        if (p.n < 2)
            throw InvalidParams("star needs n >= 2, got " + std::to_string(p.n));
        std::vector<Edge> edges;
        for (int i = 1; i < p.n; ++i)
            edges.emplace_back(0, i);
        return tree_from_edges(edges);
    }
    case TreeKind::Caterpillar: {
        if (p.spine < 1 || p.legs < 0)
            throw InvalidParams("caterpillar needs spine >= 1 and legs >= 0");
        long long total = static_cast<long long>(p.spine) * (1 + p.legs);
        if (total < 2)
            throw InvalidParams("caterpillar with spine=1 needs legs >= 1");
        if (total > std::numeric_limits<int>::max())
            throw InvalidParams("caterpillar size overflows vertex index range");
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < p.spine; ++i)
            edges.emplace_back(i, i + 1);
        for (int i = 0; i < p.spine; ++i)
            for (int j = 0; j < p.legs; ++j)
                edges.emplace_back(i, p.spine + i * p.legs + j);
        return tree_from_edges(edges);
    }
    case TreeKind::Random: {
        if (p.n < 2)
            throw InvalidParams("random tree needs n >= 2, got " + std::to_string(p.n));
        std::mt19937_64 rng(p.seed);
        std::vector<int> seq(static_cast<std::size_t>(p.n) - 2);
        for (int& x : seq)
            x = static_cast<int>(rng() % static_cast<std::uint64_t>(p.n));
        return prufer_decode(p.n, seq);
    }
    }
    throw InvalidParams("unknown tree kind");
}

Tree prufer_decode(int n, std::span<const int> seq) {
    if (n < 2)
        throw InvalidParams("prufer_decode needs n >= 2, got " + std::to_string(n));
    if (seq.size() != static_cast<std::size_t>(n) - 2)
        throw InvalidParams("prufer sequence for n=" + std::to_string(n) +
                            " must have length " + std::to_string(n - 2));
    for (int x : seq)
        if (x < 0 || x >= n)
            throw InvalidParams("prufer entry " + std::to_string(x) +
                                " outside [0, " + std::to_string(n) + ")");

    std::vector<int> deg(n, 1);
    for (int x : seq)
        ++deg[x];

    // Smallest-leaf elimination keeps the decode canonical.
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            leaves.push(v);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        deg[leaf] = 0;
        if (--deg[x] == 1)
            leaves.push(x);
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return tree_from_edges(edges);
}

namespace detail {

std::vector<std::vector<Edge>> parse_edge_blocks(std::istream& in) {
    std::vector<std::vector<Edge>> blocks;
    std::vector<Edge> current;
    std::string line;
    int lineno = 0;

    auto flush = [&] {
        if (!current.empty()) {
            blocks.push_back(std::move(current));
            current.clear();
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            flush();
            continue;
        }
        if (line[first] == '#')
            continue;

        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u >> v))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected two vertex indices");
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) +
                             ": trailing token '" + extra + "'");
        if (u < 0 || v < 0 || u > std::numeric_limits<int>::max() ||
            v > std::numeric_limits<int>::max())
            throw ParseError("line " + std::to_string(lineno) +
                             ": vertex index out of range");
        current.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    flush();
    return blocks;
}

}  // namespace detail

Tree parse_tree(std::istream& in) {
    auto blocks = detail::parse_edge_blocks(in);
    if (blocks.empty())
        throw ParseError("no edges found");
    if (blocks.size() > 1)
        throw ParseError("expected one tree block, found " +
                         std::to_string(blocks.size()));
    return tree_from_edges(blocks.front());
}

void write_tree(std::ostream& out, const Tree& t) {
    for (const auto& [u, v] : t.edges)
        out << u << ' ' << v << '\n';
}

}  // namespace prodcol
