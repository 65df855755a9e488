#pragma once

// Fraction graphs E_{p/q} as implicit circulant graphs: vertices Z_m, distinct
// u, v adjacent iff their circular distance is less than q.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shannon/continued_fraction.hpp"
#include "shannon/rational.hpp"

namespace shannon {

class CirculantFactor {
 public:
  CirculantFactor() = default;
  /// Threshold q is clamped to m, so m/q < 2 gives the complete graph K_m.
  CirculantFactor(std::int64_t m, std::int64_t q);
  /// E_{p/q} for a reduced fraction.
  static CirculantFactor from_fraction(const Fraction& f);

  std::int64_t m() const { return m_; }
  std::int64_t q() const { return q_; }

  /// The fraction m/q as an exact rational (possibly unreduced label).
  Rational value() const { return Rational(m_, q_); }
  /// Reduced label; throws for labels below 2 other than the complete graph convention.
  Fraction fraction() const { return Fraction(m_, q_); }

  std::int64_t circular_distance(std::int64_t u, std::int64_t v) const {
    std::int64_t d = (u - v) % m_;
    if (d < 0) d += m_;
    return d < m_ - d ? d : m_ - d;
  }

  /// Unchecked adjacency for in-range indices.
  bool adjacent_unchecked(std::int64_t u, std::int64_t v) const { return u != v && circular_distance(u, v) < q_; }

  /// Throws InputError when u or v is out of range.
  bool adjacent(std::int64_t u, std::int64_t v) const;

  /// Number of neighbours of each vertex.
  std::int64_t degree() const;

  /// "m/q" with the stored (unreduced) threshold.
  std::string label() const;

  friend bool operator==(const CirculantFactor&, const CirculantFactor&) = default;

 private:
  std::int64_t m_ = 1;
  std::int64_t q_ = 1;
};

/// A vertex map between fraction graphs that sends distinct non-adjacent pairs
/// to distinct non-adjacent pairs.
struct CohomMap {
  enum class Kind { floor_scale, explicit_table };

  CirculantFactor source;
  CirculantFactor target;
  Kind kind = Kind::explicit_table;
  std::vector<std::int64_t> table;
  bool verified = false;
};

/// Exhaustive check of the cohomomorphism property of map.table.
bool verify_cohomomorphism(const CohomMap& map);

/// x -> floor(x p_dst / p_src). Throws InputError when src > dst, since no
/// cohomomorphism exists in that case.
CohomMap cohom_floor(const Fraction& src, const Fraction& dst);

/// Equidistant N-point subgraph of the circle graph of radius r: label
/// N/ceil(N/r) (open) or N/(floor(N/r)+1) (closed), unreduced.
CirculantFactor equidistant_induced(const QuadraticSurd& r, std::int64_t n, bool closed);

/// E_f minus one vertex, as the equivalent fraction graph.
Fraction puncture(const Fraction& f);

}  // namespace shannon
