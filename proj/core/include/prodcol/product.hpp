#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "prodcol/spancol.hpp"
#include "prodcol/tree.hpp"

namespace prodcol {

// Cartesian product of d >= 1 trees. Vertices are coordinate tuples; flat
// indices use mixed radix with dimension 1 varying fastest.
struct ProductInstance {
    std::vector<Tree> trees;
    std::vector<int> dims;
    std::uint64_t total = 0;

    int d() const { return static_cast<int>(trees.size()); }
};

ProductInstance make_instance(std::vector<Tree> trees);

// Blank-line-separated tree blocks, one per dimension, in dimension order.
ProductInstance parse_instance(std::istream& in);
void write_instance(std::ostream& out, const ProductInstance& inst);

// Window shifts s_i = sum of ceil(delta_j / 2) over j < i. The resulting
// windows partition [1, S] where S = sum of ceil(delta_i / 2).
std::vector<int> span_offsets(const ProductInstance& inst);

// lower = 1 + sum(delta_i), upper = 1 + 2*sum(ceil(delta_i / 2)).
// prior_upper = 1 + 2*sum(delta_i - 1), defined only when every delta_i >= 2.
struct Bounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> prior_upper;
};

Bounds bounds(const ProductInstance& inst);
Bounds bounds_for_degrees(std::span<const int> deltas);

std::uint64_t mixed_radix_encode(std::span<const int> coords,
                                 std::span<const int> dims);
std::vector<int> mixed_radix_decode(std::uint64_t flat,
                                    std::span<const int> dims);

inline constexpr std::uint64_t kDefaultMaterializeCap = 10'000'000;

// Colouring of the product square: c(v) = sum of the per-tree colours of the
// coordinates. dense holds every colour in flat order when total fits the
// materialize cap, otherwise it stays empty and colour_at evaluates on
// demand. Wrapped colourings live in [0, 2S].
struct ProductColouring {
    ProductInstance instance;
    std::vector<TreeSquareColouring> per_tree;
    int span_bound = 0;
    bool wrapped = false;
    std::vector<std::int64_t> dense;

    bool materialized() const { return !dense.empty(); }
    std::int64_t colour_at(std::uint64_t flat) const;
    std::uint64_t distinct_colours() const;
};

ProductColouring colour_product(const ProductInstance& inst,
                                std::uint64_t materialize_cap = kDefaultMaterializeCap);

// Folds an unwrapped colouring into [0, 2S] modulo 2S+1. Properness on the
// square survives because every edge span lies in [1, S]; the per-tree spans
// are checked first and SpanBoundViolated reports any breach.
ProductColouring wrap(const ProductColouring& pc);

}  // namespace prodcol
