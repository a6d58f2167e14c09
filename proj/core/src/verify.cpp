#include "prodcol/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "prodcol/errors.hpp"

namespace prodcol {

std::size_t ExplicitGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj)
        twice += row.size();
    return twice / 2;
}

bool ExplicitGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& row = adj[u];
    return std::binary_search(row.begin(), row.end(), v);
}

ExplicitGraph tree_graph(const Tree& t) {
    ExplicitGraph g;
    g.n = static_cast<std::size_t>(t.n);
    g.adj.resize(g.n);
    for (int v = 0; v < t.n; ++v) {
        g.adj[v].reserve(t.adj[v].size());
        for (int w : t.adj[v])
            g.adj[v].push_back(static_cast<std::uint32_t>(w));
    }
    return g;
}

ExplicitGraph build_product_graph(const ProductInstance& inst, std::size_t cap) {
    if (inst.total > cap)
        throw TooLarge("product has " + std::to_string(inst.total) +
                       " vertices, cap is " + std::to_string(cap));
    ExplicitGraph g;
    g.n = static_cast<std::size_t>(inst.total);
    g.adj.resize(g.n);

    std::vector<std::uint64_t> stride(inst.dims.size());
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < inst.dims.size(); ++i) {
        stride[i] = acc;
        acc *= static_cast<std::uint64_t>(inst.dims[i]);
    }

    std::vector<int> coords(inst.dims.size(), 0);
    for (std::uint64_t f = 0; f < inst.total; ++f) {
        auto& row = g.adj[f];
        for (std::size_t i = 0; i < inst.dims.size(); ++i) {
            for (int w : inst.trees[i].adj[coords[i]]) {
                std::uint64_t nb =
                    f + stride[i] * static_cast<std::uint64_t>(w) -
                    stride[i] * static_cast<std::uint64_t>(coords[i]);
                row.push_back(static_cast<std::uint32_t>(nb));
            }
        }
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] + 1 < inst.dims[i]) {
                ++coords[i];
                break;
            }
            coords[i] = 0;
        }
    }
    return g;
}

ExplicitGraph square(const ExplicitGraph& g, std::size_t cap) {
    if (g.n > cap)
        throw TooLarge("graph has " + std::to_string(g.n) +
                       " vertices, cap is " + std::to_string(cap));
    ExplicitGraph sq;
    sq.n = g.n;
    sq.adj.resize(g.n);
    std::vector<std::uint32_t> mark(g.n, 0);
    std::uint32_t epoch = 0;
    for (std::size_t v = 0; v < g.n; ++v) {
        ++epoch;
        auto& row = sq.adj[v];
        for (std::uint32_t u : g.adj[v]) {
            if (mark[u] != epoch) {
                mark[u] = epoch;
                row.push_back(u);
            }
            for (std::uint32_t w : g.adj[u]) {
                if (w != v && mark[w] != epoch) {
                    mark[w] = epoch;
                    row.push_back(w);
                }
            }
        }
        std::sort(row.begin(), row.end());
    }
    return sq;
}

ProperReport check_proper(const ExplicitGraph& g,
                          std::span<const std::int64_t> colour) {
    if (colour.size() < g.n)
        throw MissingColour("colour map covers " + std::to_string(colour.size()) +
                            " of " + std::to_string(g.n) + " vertices");
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::uint32_t v : g.adj[u])
            if (v > u && colour[u] == colour[v])
                return {false, u, v};
    return {};
}

namespace {

template <typename ColourAt>
SpanReport check_spans_impl(const ProductInstance& inst, ColourAt&& colour_at) {
    const std::vector<int> shifts = span_offsets(inst);
    std::vector<std::uint64_t> stride(inst.dims.size());
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < inst.dims.size(); ++i) {
        stride[i] = acc;
        acc *= static_cast<std::uint64_t>(inst.dims[i]);
    }

    for (std::size_t i = 0; i < inst.trees.size(); ++i) {
        const Tree& t = inst.trees[i];
        const SpanWindow w = make_window(shifts[i], max_degree(t));
        const std::uint64_t rest = inst.total / static_cast<std::uint64_t>(inst.dims[i]);
        for (const auto& [a, b] : t.edges) {
            for (std::uint64_t r = 0; r < rest; ++r) {
                // Rebuild the flat base vertex from the reduced index r over
                // every dimension except i.
                std::uint64_t base = 0;
                std::uint64_t rem = r;
                for (std::size_t j = 0; j < inst.dims.size(); ++j) {
                    if (j == i)
                        continue;
                    std::uint64_t dim = static_cast<std::uint64_t>(inst.dims[j]);
                    base += stride[j] * (rem % dim);
                    rem /= dim;
                }
                std::uint64_t u = base + stride[i] * static_cast<std::uint64_t>(a);
                std::uint64_t v = base + stride[i] * static_cast<std::uint64_t>(b);
                std::int64_t gap = colour_at(u) - colour_at(v);
                if (gap < 0)
                    gap = -gap;
                if (gap < w.lo || gap > w.hi)
                    return {false, u,    v,    static_cast<int>(i) + 1,
                            gap,   w.lo, w.hi};
            }
        }
    }
    return {};
}

}  // namespace

SpanReport check_spans(const ProductInstance& inst, const ProductColouring& pc) {
    return check_spans_impl(inst,
                            [&](std::uint64_t f) { return pc.colour_at(f); });
}

SpanReport check_spans(const ProductInstance& inst,
                       std::span<const std::int64_t> colour) {
    if (colour.size() != inst.total)
        throw MissingColour("colour map covers " + std::to_string(colour.size()) +
                            " of " + std::to_string(inst.total) + " vertices");
    return check_spans_impl(inst, [&](std::uint64_t f) { return colour[f]; });
}

CliqueCertificate clique_certificate(const ProductInstance& inst) {
    CliqueCertificate cert;
    cert.coords.reserve(inst.trees.size());
    int degree_sum = 0;
    for (const Tree& t : inst.trees) {
        int best = 0;
        for (int v = 1; v < t.n; ++v)
            if (t.degree(v) > t.degree(best))
                best = v;
        cert.coords.push_back(best);
        degree_sum += t.degree(best);
    }
    cert.vertex = mixed_radix_encode(cert.coords, inst.dims);
    cert.size = 1 + degree_sum;
    return cert;
}

bool verify_clique(const ProductInstance& inst, const CliqueCertificate& cert,
                   std::size_t cap) {
    ExplicitGraph g = build_product_graph(inst, cap);
    if (cert.vertex >= g.n)
        return false;
    std::vector<std::uint32_t> members;
    members.push_back(static_cast<std::uint32_t>(cert.vertex));
    for (std::uint32_t u : g.adj[cert.vertex])
        members.push_back(u);
    std::sort(members.begin(), members.end());
    if (members.size() != static_cast<std::size_t>(cert.size))
        return false;

    ExplicitGraph sq = square(g, cap);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!sq.has_edge(members[i], members[j]))
                return false;
    return true;
}

namespace {

// Flattened adjacency for the colouring search.
struct Csr {
    std::vector<std::uint32_t> off;
    std::vector<std::uint32_t> nbr;
};

class ColourSearch {
public:
    ColourSearch(const Csr& g, const std::vector<int>& rank, int k)
        : g_(g),
          rank_(rank),
          k_(k),
          n_(rank.size()),
          full_(k >= 64 ? ~0ULL : (1ULL << k) - 1),
          dom_(n_),
          colour_(n_, -1) {
        for (std::size_t v = 0; v < n_; ++v) {
            int width = rank[v] + 1;
            dom_[v] = width >= k_ ? full_ : (1ULL << width) - 1;
        }
    }

    bool run() {
        work_.clear();
        for (std::size_t v = 0; v < n_; ++v)
            if (std::popcount(dom_[v]) == 1)
                work_.push_back(static_cast<std::uint32_t>(v));
        if (!flush_work())
            return false;
        return search();
    }

private:
    bool set_colour(std::uint32_t v, int c) {
        colour_[v] = c;
        atrail_.push_back(v);
        ++assigned_;
        const std::uint64_t bit = 1ULL << c;
        for (std::uint32_t i = g_.off[v]; i < g_.off[v + 1]; ++i) {
            std::uint32_t u = g_.nbr[i];
            if (colour_[u] >= 0 || !(dom_[u] & bit))
                continue;
            dtrail_.emplace_back(u, dom_[u]);
            dom_[u] &= ~bit;
            if (dom_[u] == 0)
                return false;
            if ((dom_[u] & (dom_[u] - 1)) == 0)
                work_.push_back(u);
        }
        return true;
    }

    // Assigns forced vertices until the worklist drains or a domain dies.
    bool flush_work() {
        for (std::size_t i = 0; i < work_.size(); ++i) {
            std::uint32_t v = work_[i];
            if (colour_[v] >= 0)
                continue;
            if (!set_colour(v, std::countr_zero(dom_[v])))
                return false;
        }
        work_.clear();
        return true;
    }

    void undo(std::size_t dmark, std::size_t amark) {
        while (dtrail_.size() > dmark) {
            auto [v, old] = dtrail_.back();
            dtrail_.pop_back();
            dom_[v] = old;
        }
        while (atrail_.size() > amark) {
            colour_[atrail_.back()] = -1;
            atrail_.pop_back();
            --assigned_;
        }
    }

    bool search() {
        if (assigned_ == n_)
            return true;
        std::uint32_t pick = 0;
        int best = k_ + 1;
        int best_rank = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            int width = std::popcount(dom_[v]);
            if (width < best || (width == best && rank_[v] < best_rank)) {
                best = width;
                best_rank = rank_[v];
                pick = static_cast<std::uint32_t>(v);
            }
        }
        std::uint64_t choices = dom_[pick];
        while (choices) {
            int c = std::countr_zero(choices);
            choices &= choices - 1;
            std::size_t dmark = dtrail_.size();
            std::size_t amark = atrail_.size();
            work_.clear();
            if (set_colour(pick, c) && flush_work() && search())
                return true;
            undo(dmark, amark);
        }
        return false;
    }

    const Csr& g_;
    const std::vector<int>& rank_;
    int k_;
    std::size_t n_;
    std::uint64_t full_;
    std::vector<std::uint64_t> dom_;
    std::vector<int> colour_;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> dtrail_;
    std::vector<std::uint32_t> atrail_;
    std::vector<std::uint32_t> work_;
    std::size_t assigned_ = 0;
};

}  // namespace

int chi_exact(const ExplicitGraph& g, std::size_t limit, int lower_hint) {
    if (g.n > limit)
        throw TooLarge("graph has " + std::to_string(g.n) +
                       " vertices, exact limit is " + std::to_string(limit));
    if (g.n == 0)
        return 0;

    std::vector<std::uint32_t> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return g.adj[a].size() > g.adj[b].size();
                     });
    std::vector<int> rank(g.n);
    for (std::size_t r = 0; r < g.n; ++r)
        rank[order[r]] = static_cast<int>(r);

    // Greedy clique along the degree order supplies a deepening floor.
    std::vector<std::uint32_t> clique;
    for (std::uint32_t v : order) {
        bool fits = true;
        for (std::uint32_t u : clique)
            if (!g.has_edge(u, v)) {
                fits = false;
                break;
            }
        if (fits)
            clique.push_back(v);
    }

    Csr csr;
    csr.off.resize(g.n + 1, 0);
    for (std::size_t v = 0; v < g.n; ++v)
        csr.off[v + 1] = csr.off[v] + static_cast<std::uint32_t>(g.adj[v].size());
    csr.nbr.reserve(csr.off.back());
    for (std::size_t v = 0; v < g.n; ++v)
        csr.nbr.insert(csr.nbr.end(), g.adj[v].begin(), g.adj[v].end());

    int k = std::max({static_cast<int>(clique.size()), lower_hint, 1});
    for (;; ++k) {
        if (k > 64)
            throw TooLarge("exact search needs more than 64 colours");
        if (static_cast<std::size_t>(k) >= g.n)
            return k;
        if (ColourSearch(csr, rank, k).run())
            return k;
    }
}

}  // namespace prodcol
