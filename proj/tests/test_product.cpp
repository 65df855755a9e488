#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "shannon/error.hpp"
#include "shannon/product.hpp"

using namespace shannon;

namespace {

VertexSet make_set(const ProductGraph& g, std::vector<Tuple> ts) {
  VertexSet s;
  s.graph = g;
  s.tuples = std::move(ts);
  return s;
}

}  // namespace

TEST_SUITE("product") {
  TEST_CASE("descriptor grammar") {
    CHECK(ProductGraph::parse("15/2^4").vertex_count() == 50625);
    CHECK(ProductGraph::parse("5/2 x 5/2 x 8/3").vertex_count() == 200);
    CHECK(ProductGraph::parse("5/2 5/2 8/3") == ProductGraph::parse("5/2x5/2x8/3"));
    CHECK(ProductGraph::parse("5/2 x 5/2 x 8/3").descriptor() == "5/2^2 x 8/3");
    CHECK_THROWS_AS(ProductGraph::parse("5/2 x"), InputError);
    CHECK_THROWS_AS(ProductGraph::parse("5/2^0"), InputError);
    CHECK_THROWS_AS(ProductGraph::parse("five"), InputError);
  }

  TEST_CASE("tuple adjacency examples") {
    const auto g = ProductGraph::parse("5/2^2");
    CHECK_FALSE(g.adjacent(Tuple{0, 0}, Tuple{1, 2}));
    CHECK(g.adjacent(Tuple{0, 0}, Tuple{1, 1}));
    CHECK(g.adjacent(Tuple{0, 0}, Tuple{0, 1}));
    CHECK_FALSE(g.adjacent(Tuple{3, 4}, Tuple{3, 4}));
    CHECK_THROWS_AS(g.adjacent(Tuple{0, 0}, Tuple{0, 5}), InputError);
    CHECK_THROWS_AS(g.adjacent(Tuple{0, 0}, Tuple{0}), InputError);
  }

  TEST_CASE("adjacency and packing agree with the oracle") {
    std::mt19937_64 rng(7);
    const std::vector<std::pair<std::int64_t, std::int64_t>> fs{{8, 3}, {5, 2}, {11, 4}};
    const auto g = ProductGraph::from_fractions({Fraction(8, 3), Fraction(5, 2), Fraction(11, 4)});
    for (int it = 0; it < 3000; ++it) {
      Tuple u, v;
      for (auto [p, q] : fs) {
        std::uniform_int_distribution<std::int64_t> d(0, p - 1);
        u.push_back(d(rng));
        v.push_back(d(rng));
      }
      CHECK(g.adjacent(u, v) == oracle::product_adjacent(fs, u, v));
      CHECK(g.adjacent_packed(g.pack(u), g.pack(v)) == oracle::product_adjacent(fs, u, v));
      CHECK(g.unpack(g.pack(u)) == u);
    }
  }

  TEST_CASE("neighbour lists match pairwise adjacency") {
    const auto g = ProductGraph::parse("7/3 x 5/2");
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbors_packed(v);
      std::sort(nb.begin(), nb.end());
      std::vector<std::uint64_t> expect;
      for (std::uint64_t w = 0; w < g.vertex_count(); ++w)
        if (g.adjacent_packed(v, w)) expect.push_back(w);
      CHECK(nb == expect);
      CHECK(nb.size() + 1 == g.closed_neighborhood_size());
    }
  }

  TEST_CASE("verification reports") {
    const auto g = ProductGraph::parse("5/2^2");
    std::vector<Tuple> orbit;
    for (std::int64_t t = 0; t < 5; ++t) orbit.push_back({t, (2 * t) % 5});
    auto ok = verify_independent(make_set(g, orbit));
    CHECK(ok.pass);
    CHECK(ok.size == 5);

    auto bad = verify_independent(make_set(g, {{0, 0}, {0, 1}}));
    CHECK_FALSE(bad.pass);
    CHECK(bad.reason == "adjacent");
    REQUIRE(bad.first_violation);
    CHECK(*bad.first_violation == std::pair<std::size_t, std::size_t>{0, 1});

    auto dup = verify_independent(make_set(g, {{0, 0}, {1, 2}, {0, 0}}));
    CHECK_FALSE(dup.pass);
    CHECK(dup.reason == "duplicate");
    CHECK(*dup.first_violation == std::pair<std::size_t, std::size_t>{0, 2});

    CHECK(verify_independent(make_set(g, {{0, 5}})).reason == "out of range");
    CHECK(verify_independent(make_set(g, {{0, 1, 2}})).reason == "arity");
    CHECK(verify_independent(make_set(g, {})).pass);
  }

  TEST_CASE("first violation is the lexicographically first pair") {
    const auto g = ProductGraph::parse("8/3^2");
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> d(0, 7);
    const std::vector<std::pair<std::int64_t, std::int64_t>> fs{{8, 3}, {8, 3}};
    for (int it = 0; it < 200; ++it) {
      std::vector<Tuple> ts(6);
      for (auto& t : ts) t = {d(rng), d(rng)};
      std::optional<std::pair<std::size_t, std::size_t>> expect;
      for (std::size_t a = 0; a < ts.size() && !expect; ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b)
          if (ts[a] == ts[b] || oracle::product_adjacent(fs, ts[a], ts[b])) {
            expect = std::make_pair(a, b);
            break;
          }
      const auto rep = verify_independent(make_set(g, ts), 2);
      CHECK(rep.pass == !expect.has_value());
      CHECK(rep.first_violation == expect);
    }
  }

  TEST_CASE("materialization") {
    const auto g = ProductGraph::parse("5/2 x 5/2 x 8/3");
    const DenseGraph d = materialize(g);
    CHECK(d.n == 200);
    CHECK(d.full_product);
    // Closed neighbourhood 3 * 3 * 5 per vertex.
    CHECK(d.edge_count() == 200 * 44 / 2);
    CHECK_THROWS_AS(materialize(ProductGraph::parse("15/2^4")), CapacityError);

    std::vector<Tuple> some{{0, 0, 0}, {1, 2, 3}, {4, 4, 7}};
    const DenseGraph s = materialize(g, some);
    CHECK(s.n == 3);
    CHECK_FALSE(s.full_product);
    CHECK(s.adjacent(0, 2) == g.adjacent(some[0], some[2]));
    CHECK(to_vertex_set(s, {1, 2}, false).tuples == std::vector<Tuple>{some[1], some[2]});
  }
}
