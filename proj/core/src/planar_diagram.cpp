#include "gpv/planar_diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace gpv {

std::size_t PlanarDiagram::double_count() const {
  return static_cast<std::size_t>(std::count_if(
      crossings.begin(), crossings.end(),
      [](const PlanarCrossing& c) { return c.kind == ChordKind::Double; }));
}

std::string PlanarDiagram::key() const {
  std::string out = "PD[";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& c = crossings[i];
    if (i) out += ',';
    out += c.kind == ChordKind::Double ? "Xd" : "X";
    out += c.sign > 0 ? "+" : "-";
    out += '(';
    for (int k = 0; k < 4; ++k) {
      if (k) out += ' ';
      out += std::to_string(c.arcs[k]);
    }
    out += ')';
  }
  out += ']';
  return out;
}

std::string to_text(const PlanarDiagram& pd) { return pd.key(); }

PlanarDiagram planar_from_gauss(const GaussDiagram& d) {
  PlanarDiagram pd;
  const auto& ps = d.passages();
  for (int a = 1; a <= static_cast<int>(ps.size()) + 1; ++a) pd.strand.push_back(a);
  for (std::uint32_t id = 0; id < d.chord_count(); ++id) {
    const auto f = static_cast<int>(d.first_position(id));
    const auto g = static_cast<int>(d.second_position(id));
    const bool first_over = is_over(ps[f].role);
    const int o = first_over ? f : g;
    const int u = first_over ? g : f;
    const Chord& ch = d.chord(id);
    PlanarCrossing x;
    x.sign = ch.sign;
    x.kind = ch.kind;
    // Arc p+1 enters passage p, arc p+2 leaves it.
    if (ch.sign > 0) x.arcs = {u + 1, o + 2, u + 2, o + 1};
    else x.arcs = {u + 1, o + 1, u + 2, o + 2};
    pd.crossings.push_back(x);
  }
  return pd;
}

void validate(const PlanarDiagram& pd) {
  std::map<int, int> uses;
  for (const auto& c : pd.crossings) {
    if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
    for (int a : c.arcs) {
      if (a <= 0) throw std::invalid_argument("arc labels must be positive");
      ++uses[a];
    }
  }
  if (pd.strand.size() != 2 * pd.crossings.size() + 1)
    throw std::invalid_argument("strand length must be 2*crossings+1");
  std::map<int, int> pos;
  for (std::size_t i = 0; i < pd.strand.size(); ++i)
    if (!pos.emplace(pd.strand[i], static_cast<int>(i)).second)
      throw std::invalid_argument("arc label repeated in strand");
  for (std::size_t i = 0; i < pd.strand.size(); ++i) {
    const int a = pd.strand[i];
    if (pd.crossings.empty()) break;
    const int expected = (i == 0 || i + 1 == pd.strand.size()) ? 1 : 2;
    if (uses[a] != expected)
      throw std::invalid_argument("arc " + std::to_string(a) + " used " +
                                  std::to_string(uses[a]) + " times");
  }
  for (const auto& [a, n] : uses)
    if (!pos.contains(a)) throw std::invalid_argument("arc " + std::to_string(a) + " not on strand");
  // Each crossing joins consecutive arcs on both of its strands.
  for (const auto& c : pd.crossings) {
    auto next = [&](int from, int to) {
      return pos.at(to) == pos.at(from) + 1;
    };
    const bool over_ok = c.sign > 0 ? next(c.arcs[3], c.arcs[1]) : next(c.arcs[1], c.arcs[3]);
    if (!next(c.arcs[0], c.arcs[2]) || !over_ok)
      throw std::invalid_argument("crossing arcs are not consecutive along the strand");
  }
}

GaussDiagram gauss_from_planar(const PlanarDiagram& pd) {
  validate(pd);
  std::map<int, int> pos;
  for (std::size_t i = 0; i < pd.strand.size(); ++i) pos[pd.strand[i]] = static_cast<int>(i);
  const std::size_t n = pd.crossings.size();
  std::vector<std::uint32_t> labels(2 * n);
  std::vector<Role> roles(2 * n);
  std::vector<int> signs(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& c = pd.crossings[k];
    const int under_in = c.arcs[0];
    const int over_in = c.sign > 0 ? c.arcs[3] : c.arcs[1];
    const bool dbl = c.kind == ChordKind::Double;
    const auto u = static_cast<std::size_t>(pos.at(under_in));
    const auto o = static_cast<std::size_t>(pos.at(over_in));
    labels[u] = labels[o] = static_cast<std::uint32_t>(k + 1);
    roles[u] = dbl ? Role::DUnder : Role::Under;
    roles[o] = dbl ? Role::DOver : Role::Over;
    signs[u] = signs[o] = c.sign;
  }
  return GaussDiagram::from_passages(labels, roles, signs);
}

PlanarDiagram switch_planar(const PlanarDiagram& pd, std::size_t index) {
  PlanarDiagram out = pd;
  auto& c = out.crossings.at(index);
  const auto a = c.arcs;
  // The old over strand becomes the under strand; rotate so its incoming arc leads.
  if (c.sign > 0) c.arcs = {a[3], a[0], a[1], a[2]};
  else c.arcs = {a[1], a[2], a[3], a[0]};
  c.sign = -c.sign;
  return out;
}

namespace {

nlohmann::ordered_json pd_object(const PlanarDiagram& pd) {
  nlohmann::ordered_json crossings = nlohmann::ordered_json::array();
  for (const auto& c : pd.crossings)
    crossings.push_back({{"arcs", c.arcs}, {"sign", c.sign},
                         {"kind", c.kind == ChordKind::Double ? "double" : "real"}});
  return {{"crossings", crossings}, {"strand", pd.strand}};
}

}  // namespace

std::string to_json(const PlanarDiagram& pd) {
  nlohmann::ordered_json j;
  j["convention"] = kPdConvention;
  j.update(pd_object(pd));
  return j.dump(2) + "\n";
}

PlanarDiagram planar_from_json(const std::string& text) {
  PlanarDiagram pd;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.contains("convention") && j.at("convention").get<std::string>() != kPdConvention)
      throw std::invalid_argument("unsupported PD convention: " + j.at("convention").get<std::string>());
    for (const auto& c : j.at("crossings")) {
      PlanarCrossing x;
      x.arcs = c.at("arcs").get<std::array<int, 4>>();
      x.sign = c.at("sign").get<int>();
      const auto kind = c.value("kind", std::string("real"));
      if (kind != "real" && kind != "double") throw std::invalid_argument("crossing kind must be real or double");
      x.kind = kind == "double" ? ChordKind::Double : ChordKind::Real;
      pd.crossings.push_back(x);
    }
    pd.strand = j.at("strand").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed PD JSON: ") + e.what());
  }
  validate(pd);
  return pd;
}

std::string to_json(const FormalSum<PlanarDiagram>& x) {
  std::map<std::string, std::pair<const PlanarDiagram*, Coeff>> sorted;
  for (const auto& [pd, c] : x) sorted.emplace(pd.key(), std::pair{&pd, c});
  nlohmann::ordered_json j;
  j["convention"] = kPdConvention;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [key, term] : sorted)
    j["terms"].push_back({{"coeff", term.second}, {"diagram", pd_object(*term.first)}});
  return j.dump(2) + "\n";
}

}  // namespace gpv
