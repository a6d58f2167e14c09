#include "prodcol/product.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <unordered_set>

#include "prodcol/errors.hpp"

namespace prodcol {

ProductInstance make_instance(std::vector<Tree> trees) {
    if (trees.empty())
        throw InvalidParams("a product needs at least one tree");
    ProductInstance inst;
    inst.trees = std::move(trees);
    inst.dims.reserve(inst.trees.size());
    inst.total = 1;
    for (const Tree& t : inst.trees) {
        inst.dims.push_back(t.n);
        std::uint64_t dim = static_cast<std::uint64_t>(t.n);
        if (inst.total > std::numeric_limits<std::uint64_t>::max() / dim)
            throw TooLarge("product vertex count overflows 64 bits");
        inst.total *= dim;
    }
    return inst;
}

ProductInstance parse_instance(std::istream& in) {
    auto blocks = detail::parse_edge_blocks(in);
    if (blocks.empty())
        throw ParseError("no tree blocks found");
    std::vector<Tree> trees;
    trees.reserve(blocks.size());
    for (const auto& block : blocks)
        trees.push_back(tree_from_edges(block));
    return make_instance(std::move(trees));
}

void write_instance(std::ostream& out, const ProductInstance& inst) {
    for (std::size_t i = 0; i < inst.trees.size(); ++i) {
        if (i)
            out << '\n';
        write_tree(out, inst.trees[i]);
    }
}

std::vector<int> span_offsets(const ProductInstance& inst) {
    std::vector<int> shifts;
    shifts.reserve(inst.trees.size());
    int s = 0;
    for (const Tree& t : inst.trees) {
        shifts.push_back(s);
        s += (max_degree(t) + 1) / 2;
    }
    return shifts;
}

Bounds bounds_for_degrees(std::span<const int> deltas) {
    if (deltas.empty())
        throw InvalidParams("bounds need at least one degree");
    Bounds b;
    int sum = 0, half_sum = 0, prior_sum = 0;
    bool prior_defined = true;
    for (int delta : deltas) {
        if (delta < 1)
            throw InvalidDelta("delta must be >= 1, got " + std::to_string(delta));
        sum += delta;
        half_sum += (delta + 1) / 2;
        prior_sum += delta - 1;
        if (delta < 2)
            prior_defined = false;
    }
    b.lower = 1 + sum;
    b.upper = 1 + 2 * half_sum;
    if (prior_defined)
        b.prior_upper = 1 + 2 * prior_sum;
    return b;
}

Bounds bounds(const ProductInstance& inst) {
    std::vector<int> deltas;
    deltas.reserve(inst.trees.size());
    for (const Tree& t : inst.trees)
        deltas.push_back(max_degree(t));
    return bounds_for_degrees(deltas);
}

std::uint64_t mixed_radix_encode(std::span<const int> coords,
                                 std::span<const int> dims) {
    if (coords.size() != dims.size())
        throw OutOfRange("coordinate count " + std::to_string(coords.size()) +
                         " does not match dimension count " +
                         std::to_string(dims.size()));
    std::uint64_t flat = 0;
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= dims[i])
            throw OutOfRange("coordinate " + std::to_string(coords[i]) +
                             " outside [0, " + std::to_string(dims[i]) +
                             ") in dimension " + std::to_string(i + 1));
        flat += stride * static_cast<std::uint64_t>(coords[i]);
        stride *= static_cast<std::uint64_t>(dims[i]);
    }
    return flat;
}

std::vector<int> mixed_radix_decode(std::uint64_t flat,
                                    std::span<const int> dims) {
    std::uint64_t total = 1;
    for (int dim : dims)
        total *= static_cast<std::uint64_t>(dim);
    if (flat >= total)
        throw OutOfRange("flat index " + std::to_string(flat) +
                         " outside [0, " + std::to_string(total) + ")");
    std::vector<int> coords(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
        std::uint64_t dim = static_cast<std::uint64_t>(dims[i]);
        coords[i] = static_cast<int>(flat % dim);
        flat /= dim;
    }
    return coords;
}

std::int64_t ProductColouring::colour_at(std::uint64_t flat) const {
    if (flat >= instance.total)
        throw OutOfRange("flat index " + std::to_string(flat) +
                         " outside [0, " + std::to_string(instance.total) + ")");
    if (!dense.empty())
        return dense[flat];
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < per_tree.size(); ++i) {
        std::uint64_t dim = static_cast<std::uint64_t>(instance.dims[i]);
        sum += per_tree[i].colours[flat % dim];
        flat /= dim;
    }
    if (!wrapped)
        return sum;
    std::int64_t m = 2 * static_cast<std::int64_t>(span_bound) + 1;
    return ((sum % m) + m) % m;
}

std::uint64_t ProductColouring::distinct_colours() const {
    if (wrapped) {
        std::vector<char> used(2 * static_cast<std::size_t>(span_bound) + 1, 0);
        for (std::uint64_t f = 0; f < instance.total; ++f)
            used[static_cast<std::size_t>(colour_at(f))] = 1;
        return static_cast<std::uint64_t>(std::count(used.begin(), used.end(), 1));
    }
    std::unordered_set<std::int64_t> used;
    for (std::uint64_t f = 0; f < instance.total; ++f)
        used.insert(colour_at(f));
    return used.size();
}

ProductColouring colour_product(const ProductInstance& inst,
                                std::uint64_t materialize_cap) {
    ProductColouring pc;
    pc.instance = inst;
    pc.wrapped = false;
    const std::vector<int> shifts = span_offsets(inst);
    pc.per_tree.reserve(inst.trees.size());
    int span = 0;
    for (std::size_t i = 0; i < inst.trees.size(); ++i) {
        pc.per_tree.push_back(colour_tree_square(inst.trees[i], shifts[i]));
        span += pc.per_tree[i].window.half_delta;
    }
    pc.span_bound = span;

    if (inst.total <= materialize_cap) {
        pc.dense.resize(inst.total);
        // Odometer walk in flat order; the running sum tracks coordinate
        // increments so each vertex costs O(1) amortized.
        std::vector<int> coords(inst.dims.size(), 0);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < pc.per_tree.size(); ++i)
            sum += pc.per_tree[i].colours[0];
        for (std::uint64_t f = 0; f < inst.total; ++f) {
            pc.dense[f] = sum;
            for (std::size_t i = 0; i < coords.size(); ++i) {
                const auto& col = pc.per_tree[i].colours;
                if (coords[i] + 1 < inst.dims[i]) {
                    sum += col[coords[i] + 1] - col[coords[i]];
                    ++coords[i];
                    break;
                }
                sum += col[0] - col[coords[i]];
                coords[i] = 0;
            }
        }
    }
    return pc;
}

ProductColouring wrap(const ProductColouring& pc) {
    if (pc.wrapped)
        throw InvalidParams("colouring is already wrapped");
    const std::int64_t span = pc.span_bound;
    for (std::size_t i = 0; i < pc.per_tree.size(); ++i) {
        const auto& tc = pc.per_tree[i];
        for (const auto& [a, b] : tc.tree.edges) {
            std::int64_t gap = tc.colours[a] - tc.colours[b];
            if (gap < 0)
                gap = -gap;
            if (gap > span)
                throw SpanBoundViolated(
                    "dimension " + std::to_string(i + 1) + " edge (" +
                    std::to_string(a) + ", " + std::to_string(b) + ") has span " +
                    std::to_string(gap) + " > " + std::to_string(span));
        }
    }

    ProductColouring out = pc;
    out.wrapped = true;
    if (!out.dense.empty()) {
        const std::int64_t m = 2 * span + 1;
        for (std::int64_t& c : out.dense)
            c = ((c % m) + m) % m;
    }
    return out;
}

}  // namespace prodcol
