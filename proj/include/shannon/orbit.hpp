#pragma once

// Orbit independent sets {s_1 g_1 + ... + s_r g_r : s in Z_m^r} in a product
// of circulants on a common modulus m. A single generator tuple gives the
// cyclic orbit {t g : t in Z_m}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shannon/product.hpp"

namespace shannon {

struct OrbitSpec {
  std::int64_t m = 1;
  std::vector<Tuple> gens;       ///< generator tuples, entries reduced mod m
  std::vector<std::int64_t> qs;  ///< thresholds of the ambient factors E_{m/q_i}

  OrbitSpec() = default;
  /// Validates arities and reduces generators mod m. Throws InputError.
  OrbitSpec(std::int64_t m, std::vector<Tuple> gens, std::vector<std::int64_t> qs);
  static OrbitSpec cyclic(std::int64_t m, Tuple gen, std::vector<std::int64_t> qs);

  std::size_t arity() const { return qs.size(); }
  ProductGraph ambient() const;

  /// "m=383 gens=1,75,265 qs=51,51,51"; several generators are separated by ';'.
  std::string str() const;
  static OrbitSpec parse(std::string_view text);

  friend bool operator==(const OrbitSpec&, const OrbitSpec&) = default;
};

struct OrbitCheck {
  bool independent = false;
  std::size_t size = 0;
  /// Coefficients of the first orbit element adjacent to zero.
  std::optional<std::vector<std::int64_t>> witness;
  /// The same for a single generator: the least failing t.
  std::optional<std::int64_t> witness_t;
};

/// Difference test: every nonzero orbit element must be non-adjacent to the
/// zero tuple. Throws InputError when the generators produce repeated
/// elements (gcd(g, m) > 1 for a single generator).
OrbitCheck orbit_verify(const OrbitSpec& s);

/// The explicit orbit, in coefficient order, in the ambient product.
VertexSet orbit_expand(const OrbitSpec& s);

struct PunctureResult {
  /// Orbit elements without zero coordinates, in the ambient product.
  VertexSet in_ambient;
  /// Coordinates relabelled 1..m-1 -> 0..m-2 (the punctured factors' vertices).
  std::vector<Tuple> relabelled;
  /// Fraction graphs equivalent to the punctured factors.
  std::vector<Fraction> punctured;
  /// Image under x -> floor(x p'/m) in the product of the punctured fractions.
  VertexSet image;
  std::size_t dropped = 0;
  bool zero_generator = false;  ///< some g_i = 0, so whole orbit lines vanish
};

/// Requires every ambient label m/q_i to be a reduced fraction >= 2.
PunctureResult orbit_puncture(const OrbitSpec& s);

struct OrbitSearchOptions {
  bool exhaustive = true;
  std::uint64_t max_candidates = 0;  ///< 0 = no limit (exhaustive mode)
  std::uint64_t samples = 10000;     ///< random mode
  std::uint64_t seed = 1;
  unsigned threads = 1;              ///< 0 = hardware concurrency
};

/// Cyclic orbits with g_1 = 1. Coordinates with equal thresholds are taken in
/// nondecreasing generator order. Results are sorted lexicographically.
std::vector<OrbitSpec> orbit_search(std::int64_t m, const std::vector<std::int64_t>& qs,
                                    const OrbitSearchOptions& options = {});

}  // namespace shannon
