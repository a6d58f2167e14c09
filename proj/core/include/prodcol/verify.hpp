#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prodcol/product.hpp"
#include "prodcol/tree.hpp"

namespace prodcol {

inline constexpr std::size_t kDefaultGraphCap = 50'000;
inline constexpr std::size_t kDefaultChiLimit = 64;

// Simple undirected graph with sorted neighbour lists and no self-loops.
struct ExplicitGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::uint32_t>> adj;

    std::size_t edge_count() const;
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
};

ExplicitGraph tree_graph(const Tree& t);

// Materializes the product on flat indices. Throws TooLarge past the cap.
ExplicitGraph build_product_graph(const ProductInstance& inst,
                                  std::size_t cap = kDefaultGraphCap);

// Distance-1-or-2 graph of g.
ExplicitGraph square(const ExplicitGraph& g, std::size_t cap = kDefaultGraphCap);

// ok, or the lexicographically first monochromatic edge (u, v) with u < v.
// Throws MissingColour when the colour map does not cover every vertex.
struct ProperReport {
    bool ok = true;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
};

ProperReport check_proper(const ExplicitGraph& g,
                          std::span<const std::int64_t> colour);

// ok, or the first product edge whose colour gap falls outside the window of
// its dimension. Scans dimensions in order, tree edges in sorted order, then
// the remaining coordinates in flat order.
struct SpanReport {
    bool ok = true;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    int dimension = 0;
    std::int64_t span = 0;
    int lo = 0;
    int hi = 0;
};

SpanReport check_spans(const ProductInstance& inst, const ProductColouring& pc);
SpanReport check_spans(const ProductInstance& inst,
                       std::span<const std::int64_t> colour);

// Closed neighbourhood of the vertex whose coordinates pick a maximum-degree
// vertex in every tree (lowest index wins ties). Its size is 1 + sum(delta_i)
// and it is a clique in the product square.
struct CliqueCertificate {
    std::vector<int> coords;
    std::uint64_t vertex = 0;
    int size = 0;
};

CliqueCertificate clique_certificate(const ProductInstance& inst);

// Rebuilds the square explicitly and checks the certificate pairwise.
bool verify_clique(const ProductInstance& inst, const CliqueCertificate& cert,
                   std::size_t cap = kDefaultGraphCap);

// Exact chromatic number by iterative deepening on k-colourability. Vertices
// are ranked by descending degree (index breaks ties); vertex at rank r only
// ever takes colours 0..min(r, k-1), which cuts colour symmetry. The search
// picks the vertex with the smallest remaining domain and propagates forced
// assignments. Deterministic and single-threaded. Throws TooLarge when the
// graph exceeds `limit` vertices or the search would need more than 64
// colours. lower_hint seeds the deepening floor alongside a greedy clique.
int chi_exact(const ExplicitGraph& g, std::size_t limit = kDefaultChiLimit,
              int lower_hint = 0);

}  // namespace prodcol
