#include "shannon/io.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "shannon/error.hpp"

namespace shannon {

using nlohmann::json;

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

json real_json(double v) { return {{"display", format_real(v)}, {"value", v}}; }

void write_vertex_set(std::ostream& out, const VertexSet& s) {
  for (const auto& t : s.tuples) {
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << '\n';
  }
}

VertexSet read_vertex_set(std::istream& in, const ProductGraph& g) {
  VertexSet s;
  s.graph = g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Tuple t;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        t.push_back(std::stoll(field, &used));
        if (field.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": bad coordinate '" + field + "'");
      }
    }
    if (t.size() != g.arity())
      throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(g.arity()) + " coordinates");
    s.tuples.push_back(std::move(t));
  }
  return s;
}

VertexSet parse_base15_set(std::string_view text, const ProductGraph& g) {
  VertexSet s;
  s.graph = g;
  std::size_t pos = 0, index = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    auto bad = [&](const std::string& why) {
      return InputError("token " + std::to_string(index) + " '" + std::string(tok) + "': " + why);
    };
    if (tok.size() != g.arity()) throw bad("expected " + std::to_string(g.arity()) + " characters");
    Tuple t;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      const char c = tok[i];
      std::int64_t d;
      if (c >= '0' && c <= '9')
        d = c - '0';
      else if (c >= 'A' && c <= 'E')
        d = 10 + (c - 'A');
      else
        throw bad(std::string("character '") + c + "' is not a base-15 digit");
      if (d >= g.factors()[i].m()) throw bad("coordinate out of range");
      t.push_back(d);
    }
    s.tuples.push_back(std::move(t));
    pos = end;
    ++index;
  }
  return s;
}

std::string format_base15_set(const VertexSet& s, std::size_t per_line) {
  static constexpr char digits[] = "0123456789ABCDE";
  std::string out;
  for (std::size_t k = 0; k < s.tuples.size(); ++k) {
    for (auto x : s.tuples[k]) {
      if (x < 0 || x >= 15) throw InputError("coordinate " + std::to_string(x) + " has no base-15 digit");
      out += digits[x];
    }
    out += (per_line && (k + 1) % per_line == 0) || k + 1 == s.tuples.size() ? '\n' : ' ';
  }
  return out;
}

json solve_result_json(const std::string& graph, const SolveResult& r, const std::string& witness_path,
                       std::uint64_t seed) {
  json j;
  j["graph"] = graph;
  j["alpha"] = r.alpha;
  j["status"] = to_string(r.status);
  j["witness_path"] = witness_path.empty() ? json(nullptr) : json(witness_path);
  j["nodes"] = r.nodes;
  j["seconds"] = r.seconds;
  j["seed"] = seed;
  return j;
}

json bound_report_json(const BoundReport& r) {
  json j;
  j["graph"] = r.graph;
  j["lower"] = {{"value", r.lower.value}, {"method", r.lower.method}, {"certificate", r.lower.certificate}};
  j["upper"] = {{"nested_floor", r.nested_floor.str()},
                {"nested_floor_exhaustive", r.nested_floor_exhaustive},
                {"chi_f", to_string(r.chi_f)},
                {"theta", real_json(r.theta)}};
  j["gap"] = real_json(r.gap);
  j["alpha_determined"] = r.alpha_determined;
  return j;
}

PipelineConfig parse_pipeline_config(const json& j) {
  try {
    PipelineConfig c;
    c.orbit = OrbitSpec::parse(j.at("orbit").get<std::string>());
    const Fraction target = parse_fraction(j.at("target").get<std::string>());
    c.rounding.source_m = c.orbit.m;
    c.rounding.target_n = to_int64(target.p());
    c.rounding.target_q = to_int64(target.q());
    for (const auto& e : j.at("eps")) c.rounding.eps.push_back(parse_rational(e.is_string() ? e.get<std::string>() : e.dump()));
    if (c.rounding.eps.size() != c.orbit.arity()) throw InputError("eps needs one entry per orbit coordinate");
    c.rounding.validate();
    c.heuristic.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("budget")) {
      const auto& b = j.at("budget");
      c.heuristic.max_seconds = b.value("seconds", 0.0);
      c.heuristic.iterations = b.value("iterations", std::uint64_t{0});
      c.heuristic.restarts = b.value("restarts", 1U);
    }
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("pipeline config: ") + e.what());
  }
}

}  // namespace shannon
