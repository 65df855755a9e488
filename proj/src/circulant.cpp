#include "shannon/circulant.hpp"

#include "shannon/error.hpp"

namespace shannon {

CirculantFactor::CirculantFactor(std::int64_t m, std::int64_t q) : m_(m), q_(q) {
  if (m < 1 || q < 1) throw InputError("circulant factor needs m >= 1 and q >= 1");
  if (q_ > m_) q_ = m_;
  if (2 * q_ > m_) q_ = m_;  // complete graph
}

CirculantFactor CirculantFactor::from_fraction(const Fraction& f) {
  return CirculantFactor(to_int64(f.p()), to_int64(f.q()));
}

bool CirculantFactor::adjacent(std::int64_t u, std::int64_t v) const {
  if (u < 0 || v < 0 || u >= m_ || v >= m_)
    throw InputError("vertex index out of range for " + label());
  return adjacent_unchecked(u, v);
}

std::int64_t CirculantFactor::degree() const {
  if (q_ >= m_) return m_ - 1;
  return 2 * (q_ - 1);
}

std::string CirculantFactor::label() const { return std::to_string(m_) + "/" + std::to_string(q_); }

bool verify_cohomomorphism(const CohomMap& map) {
  const auto& src = map.source;
  const auto& dst = map.target;
  if (static_cast<std::int64_t>(map.table.size()) != src.m()) return false;
  for (std::int64_t x : map.table)
    if (x < 0 || x >= dst.m()) return false;
  for (std::int64_t u = 0; u < src.m(); ++u) {
    for (std::int64_t v = u + 1; v < src.m(); ++v) {
      if (src.adjacent_unchecked(u, v)) continue;
      std::int64_t fu = map.table[u], fv = map.table[v];
      if (fu == fv || dst.adjacent_unchecked(fu, fv)) return false;
    }
  }
  return true;
}

CohomMap cohom_floor(const Fraction& src, const Fraction& dst) {
  if (src > dst)
    throw InputError("no cohomomorphism from E_" + src.str() + " to E_" + dst.str() + " (source is larger)");
  CohomMap map;
  map.source = CirculantFactor::from_fraction(src);
  map.target = CirculantFactor::from_fraction(dst);
  map.kind = CohomMap::Kind::floor_scale;
  const std::int64_t ps = map.source.m(), pd = map.target.m();
  map.table.resize(ps);
  for (std::int64_t x = 0; x < ps; ++x) map.table[x] = x * pd / ps;
  map.verified = verify_cohomomorphism(map);
  return map;
}

CirculantFactor equidistant_induced(const QuadraticSurd& r, std::int64_t n, bool closed) {
  if (n < 2) throw InputError("equidistant subgraph needs N >= 2");
  if (r.compare(Rational(2)) < 0) throw InputError("circle graph radius must be >= 2");
  // N / r as a surd: N (a + b sqrt d)/c inverted.
  QuadraticSurd inv = QuadraticSurd(r.a() * r.c() * n, -r.b() * r.c() * n, r.d(),
                                    r.a() * r.a() - r.b() * r.b() * r.d());
  BigInt q = closed ? inv.floor() + 1 : inv.ceil();
  return CirculantFactor(n, to_int64(q));
}

Fraction puncture(const Fraction& f) { return removal_pair(f).child; }

}  // namespace shannon
