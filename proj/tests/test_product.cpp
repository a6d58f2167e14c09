#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "prodcol/errors.hpp"
#include "prodcol/product.hpp"

using namespace prodcol;

namespace {

Tree path(int n) { return generate({.kind = TreeKind::Path, .n = n}); }
Tree star(int n) { return generate({.kind = TreeKind::Star, .n = n}); }

ProductInstance random_instance(std::mt19937_64& rng, int max_d, int max_n) {
    int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_d));
    std::vector<Tree> trees;
    for (int i = 0; i < d; ++i) {
        int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
        trees.push_back(generate({.kind = TreeKind::Random, .n = n, .seed = rng()}));
    }
    return make_instance(std::move(trees));
}

}  // namespace

TEST_CASE("make_instance and span_offsets") {
    ProductInstance inst = make_instance({star(4), star(4)});
    CHECK(inst.d() == 2);
    CHECK(inst.dims == std::vector<int>{4, 4});
    CHECK(inst.total == 16);
    CHECK(span_offsets(inst) == std::vector<int>{0, 2});

    ProductInstance cube = make_instance({path(3), path(3), path(3)});
    CHECK(span_offsets(cube) == std::vector<int>{0, 1, 2});

    ProductInstance single = make_instance({path(7)});
    CHECK(span_offsets(single) == std::vector<int>{0});

    CHECK_THROWS_AS(make_instance({}), InvalidParams);
}

TEST_CASE("bounds formulas") {
    Bounds b = bounds_for_degrees(std::vector<int>{2, 2});
    CHECK(b.lower == 5);
    CHECK(b.upper == 5);
    CHECK(b.prior_upper == 5);

    b = bounds_for_degrees(std::vector<int>{3, 3});
    CHECK(b.lower == 7);
    CHECK(b.upper == 9);
    CHECK(b.prior_upper == 9);

    b = bounds_for_degrees(std::vector<int>{4, 2});
    CHECK(b.lower == 7);
    CHECK(b.upper == 7);
    CHECK(b.prior_upper == 9);

    b = bounds_for_degrees(std::vector<int>{1});
    CHECK(b.lower == 2);
    CHECK(b.upper == 3);
    CHECK_FALSE(b.prior_upper.has_value());

    b = bounds_for_degrees(std::vector<int>{12});
    CHECK(b.lower == 13);
    CHECK(b.upper == 13);
    CHECK(b.prior_upper == 23);

    CHECK_THROWS_AS(bounds_for_degrees(std::vector<int>{}), InvalidParams);
    CHECK_THROWS_AS(bounds_for_degrees(std::vector<int>{2, 0}), InvalidDelta);
}

TEST_CASE("bounds of an instance use the tree degrees") {
    Bounds b = bounds(make_instance({star(5), path(4)}));
    CHECK(b.lower == 7);
    CHECK(b.upper == 7);
    CHECK(b.prior_upper == 9);
}

TEST_CASE("mixed radix encode and decode") {
    std::vector<int> dims{3, 3};
    CHECK(mixed_radix_encode(std::vector<int>{2, 1}, dims) == 5);
    for (std::uint64_t f = 0; f < 9; ++f)
        CHECK(mixed_radix_encode(mixed_radix_decode(f, dims), dims) == f);

    CHECK_THROWS_AS(mixed_radix_decode(9, dims), OutOfRange);
    CHECK_THROWS_AS(mixed_radix_encode(std::vector<int>{3, 0}, dims), OutOfRange);
    CHECK_THROWS_AS(mixed_radix_encode(std::vector<int>{-1, 0}, dims), OutOfRange);
    CHECK_THROWS_AS(mixed_radix_encode(std::vector<int>{1}, dims), OutOfRange);
}

TEST_CASE("colour_product golden for the 3x3 grid") {
    ProductInstance inst = make_instance({path(3), path(3)});
    ProductColouring pc = colour_product(inst);
    CHECK(pc.span_bound == 2);
    CHECK_FALSE(pc.wrapped);
    CHECK(pc.materialized());
    CHECK(pc.dense ==
          std::vector<std::int64_t>{0, 1, 2, 2, 3, 4, 4, 5, 6});

    ProductColouring wrapped = wrap(pc);
    CHECK(wrapped.wrapped);
    CHECK(wrapped.dense ==
          std::vector<std::int64_t>{0, 1, 2, 2, 3, 4, 4, 0, 1});
    CHECK(wrapped.distinct_colours() == 5);
    CHECK_THROWS_AS(wrap(wrapped), InvalidParams);
}

TEST_CASE("wrap golden for the product of two single edges") {
    ProductInstance inst = make_instance({path(2), path(2)});
    ProductColouring pc = wrap(colour_product(inst));
    CHECK(pc.span_bound == 2);
    CHECK(pc.dense == std::vector<std::int64_t>{0, 1, 2, 3});
    CHECK(pc.distinct_colours() == 4);
}

TEST_CASE("on-demand colouring matches the dense one") {
    ProductInstance inst = make_instance({path(3), path(3)});
    ProductColouring dense = colour_product(inst);
    ProductColouring lazy = colour_product(inst, 4);
    CHECK_FALSE(lazy.materialized());
    for (std::uint64_t f = 0; f < inst.total; ++f)
        CHECK(lazy.colour_at(f) == dense.colour_at(f));
    CHECK(lazy.distinct_colours() == dense.distinct_colours());

    ProductColouring lazy_wrapped = wrap(lazy);
    ProductColouring dense_wrapped = wrap(dense);
    CHECK_FALSE(lazy_wrapped.materialized());
    for (std::uint64_t f = 0; f < inst.total; ++f)
        CHECK(lazy_wrapped.colour_at(f) == dense_wrapped.colour_at(f));
    CHECK_THROWS_AS(lazy.colour_at(inst.total), OutOfRange);
}

TEST_CASE("wrap refuses a tampered per-tree colouring") {
    ProductInstance inst = make_instance({path(3), path(3)});
    ProductColouring pc = colour_product(inst);
    pc.per_tree[0].colours[2] = 5;
    CHECK_THROWS_AS(wrap(pc), SpanBoundViolated);
}

TEST_CASE("instance text round trip") {
    ProductInstance inst = make_instance({star(5), path(4)});
    std::ostringstream out;
    write_instance(out, inst);
    CHECK(out.str() == "0 1\n0 2\n0 3\n0 4\n\n0 1\n1 2\n2 3\n");

    std::istringstream in(out.str());
    ProductInstance back = parse_instance(in);
    CHECK(back.dims == inst.dims);
    CHECK(back.trees == inst.trees);

    std::istringstream single("0 1\n1 2\n");
    CHECK(parse_instance(single).d() == 1);

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_instance(empty), ParseError);
}

TEST_CASE("windows of an instance tile the span range") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        ProductInstance inst = random_instance(rng, 3, 7);
        std::vector<int> shifts = span_offsets(inst);
        int span = 0;
        std::vector<char> hit;
        for (std::size_t i = 0; i < inst.trees.size(); ++i) {
            SpanWindow w = make_window(shifts[i], max_degree(inst.trees[i]));
            span += w.half_delta;
            if (static_cast<int>(hit.size()) < span + 1)
                hit.resize(span + 1, 0);
            for (int m = w.lo; m <= w.hi; ++m) {
                CHECK(hit[m] == 0);
                hit[m] = 1;
            }
        }
        for (int m = 1; m <= span; ++m)
            CHECK(hit[m] == 1);
    }
}

TEST_CASE("wrapped colourings stay within the guaranteed palette") {
    std::mt19937_64 rng(60101);
    for (int trial = 0; trial < 40; ++trial) {
        ProductInstance inst = random_instance(rng, 3, 6);
        Bounds b = bounds(inst);
        ProductColouring pc = wrap(colour_product(inst));
        for (std::uint64_t f = 0; f < inst.total; ++f) {
            std::int64_t c = pc.colour_at(f);
            CHECK(c >= 0);
            CHECK(c <= 2 * pc.span_bound);
        }
        std::uint64_t used = pc.distinct_colours();
        CHECK(used <= static_cast<std::uint64_t>(b.upper));
        CHECK(used >= static_cast<std::uint64_t>(b.lower));

        bool all_even = true;
        for (const Tree& t : inst.trees)
            if (max_degree(t) % 2 != 0)
                all_even = false;
        if (all_even)
            CHECK(used == static_cast<std::uint64_t>(b.lower));
    }
}
