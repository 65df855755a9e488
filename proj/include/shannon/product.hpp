#pragma once

// Strong products of circulant factors. Vertices are tuples; internally they
// are packed in mixed radix with the first coordinate most significant, so
// packed order is lexicographic tuple order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shannon/bitset.hpp"
#include "shannon/circulant.hpp"

namespace shannon {

using Tuple = std::vector<std::int64_t>;

class ProductGraph {
 public:
  ProductGraph() = default;
  explicit ProductGraph(std::vector<CirculantFactor> factors);
  static ProductGraph from_fractions(const std::vector<Fraction>& fractions);
  static ProductGraph power(const CirculantFactor& f, std::size_t k);

  /// Descriptor grammar: factors "p/q" separated by spaces or 'x', with an
  /// optional "^k" power suffix, e.g. "15/2^4" or "5/2 x 5/2 x 8/3".
  static ProductGraph parse(std::string_view descriptor);

  const std::vector<CirculantFactor>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }
  std::uint64_t vertex_count() const { return count_; }

  std::uint64_t pack(std::span<const std::int64_t> t) const;
  Tuple unpack(std::uint64_t v) const;
  bool in_range(std::span<const std::int64_t> t) const;

  /// Throws InputError on arity mismatch or out-of-range coordinates.
  bool adjacent(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const;
  bool adjacent_packed(std::uint64_t u, std::uint64_t v) const;

  /// Packed ids of all vertices adjacent to v (v excluded).
  std::vector<std::uint64_t> neighbors_packed(std::uint64_t v) const;
  /// Product of closed-neighbourhood sizes of the factors.
  std::uint64_t closed_neighborhood_size() const;

  std::string descriptor() const;

  friend bool operator==(const ProductGraph& a, const ProductGraph& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<CirculantFactor> factors_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t count_ = 1;
};

/// Explicit vertex set, typically a certificate for a lower bound on alpha.
struct VertexSet {
  ProductGraph graph;
  std::vector<Tuple> tuples;
  bool claimed_independent = false;
};

struct VerifyReport {
  bool pass = false;
  std::size_t size = 0;
  std::string reason;  ///< empty on pass; "adjacent", "duplicate", "out of range", "arity"
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;  ///< indices into tuples
};

/// Exact independence check. On failure reports the lexicographically first
/// violating index pair. threads = 0 uses the hardware concurrency.
VerifyReport verify_independent(const VertexSet& s, unsigned threads = 1);

/// Dense adjacency over an explicit vertex list, for the independence solvers.
struct DenseGraph {
  std::size_t n = 0;
  std::vector<Bitset> adj;
  std::vector<std::vector<std::uint32_t>> neighbors;
  /// Packed product id of each vertex (or the vertex index for abstract graphs).
  std::vector<std::uint64_t> labels;
  std::optional<ProductGraph> source;
  bool full_product = false;

  bool adjacent(std::size_t u, std::size_t v) const { return adj[u].test(v); }
  std::size_t edge_count() const;
  std::string descriptor() const;

  static DenseGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
};

inline constexpr std::size_t kDefaultMaterializeCap = 20000;

/// Whole product. Throws CapacityError above the cap.
DenseGraph materialize(const ProductGraph& g, std::size_t cap = kDefaultMaterializeCap);
/// Induced subgraph on the given distinct vertices, in the given order.
DenseGraph materialize(const ProductGraph& g, std::span<const Tuple> vertices,
                       std::size_t cap = kDefaultMaterializeCap);

/// Tuples of the given vertex indices of a materialized product subgraph.
VertexSet to_vertex_set(const DenseGraph& g, const std::vector<std::uint32_t>& vertices, bool claimed_independent);

}  // namespace shannon
