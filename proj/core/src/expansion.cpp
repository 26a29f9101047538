#include "gpv/expansion.hpp"

#include <algorithm>
#include <bit>
#include "json.hpp"
#include <stdexcept>

namespace gpv {

namespace {

template <bool Signed>
DiagramSum subset_sum(const GaussDiagram& d) {
  const auto m = d.real_count();
  if (m >= 63) throw std::invalid_argument("too many real chords to expand");
  DiagramSum out;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    Coeff c = 1;
    if constexpr (Signed)
      if ((m - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1) c = -1;
    out.add(subdiagram_mask(d, mask), c);
  }
  return out;
}

}  // namespace

DiagramSum s(const GaussDiagram& d) { return subset_sum<false>(d); }
DiagramSum s_inv(const GaussDiagram& d) { return subset_sum<true>(d); }

DiagramSum s(const DiagramSum& x) {
  DiagramSum out;
  for (const auto& [d, c] : x) out.add(s(d), c);
  return out;
}

DiagramSum s_inv(const DiagramSum& x) {
  DiagramSum out;
  for (const auto& [d, c] : x) out.add(s_inv(d), c);
  return out;
}

std::uint64_t diagram_count(int k) {
  std::uint64_t n = 1;
  for (int i = 1; i <= k; ++i) n *= static_cast<std::uint64_t>(2 * i - 1) * 4;
  return n;
}

namespace {

// Perfect matchings of 2k positions in canonical order (chord ids by first
// passage fall out of always pairing the lowest free position).
void matchings(std::vector<int>& label, int next, std::vector<std::vector<int>>& out) {
  auto it = std::find(label.begin(), label.end(), -1);
  if (it == label.end()) {
    out.push_back(label);
    return;
  }
  *it = next;
  for (auto jt = it + 1; jt != label.end(); ++jt) {
    if (*jt != -1) continue;
    *jt = next;
    matchings(label, next + 1, out);
    *jt = -1;
  }
  *it = -1;
}

}  // namespace

std::vector<GaussDiagram> enumerate(int kmax) {
  if (kmax < 0) throw std::invalid_argument("enumerate: kmax must be >= 0");
  std::vector<GaussDiagram> out;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<int> label(static_cast<std::size_t>(2 * k), -1);
    std::vector<std::vector<int>> ms;
    matchings(label, 0, ms);
    for (const auto& m : ms) {
      std::vector<std::uint32_t> labels(m.begin(), m.end());
      // bit c of `over` says chord c is first met as over, bit c of `neg` flips its sign
      for (std::uint32_t over = 0; over < (1u << k); ++over)
        for (std::uint32_t neg = 0; neg < (1u << k); ++neg) {
          std::vector<Role> roles(m.size());
          std::vector<int> signs(m.size());
          std::vector<bool> seen(static_cast<std::size_t>(k), false);
          for (std::size_t i = 0; i < m.size(); ++i) {
            const auto c = static_cast<std::size_t>(m[i]);
            const bool first_over = ((over >> c) & 1u) != 0;
            roles[i] = (first_over != seen[c]) ? Role::Over : Role::Under;
            seen[c] = true;
            signs[i] = ((neg >> c) & 1u) ? -1 : 1;
          }
          out.push_back(GaussDiagram::from_passages(labels, roles, signs));
        }
    }
  }
  std::sort(out.begin(), out.end(), [](const GaussDiagram& a, const GaussDiagram& b) {
    return a.key() < b.key();
  });
  return out;
}

GaussDiagram random_diagram(std::mt19937_64& rng, int chords, int doubles) {
  if (chords < 0 || doubles < 0 || doubles > chords) throw std::invalid_argument("random_diagram: bad counts");
  std::vector<std::uint32_t> labels;
  for (int c = 0; c < chords; ++c) labels.insert(labels.end(), 2, static_cast<std::uint32_t>(c));
  std::shuffle(labels.begin(), labels.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> first_over(static_cast<std::size_t>(chords)), seen(static_cast<std::size_t>(chords), false);
  std::vector<int> sign(static_cast<std::size_t>(chords));
  for (int c = 0; c < chords; ++c) {
    first_over[static_cast<std::size_t>(c)] = coin(rng);
    sign[static_cast<std::size_t>(c)] = coin(rng) ? 1 : -1;
  }
  std::vector<Role> roles;
  std::vector<int> signs;
  for (auto c : labels) {
    roles.push_back(first_over[c] != seen[c] ? Role::Over : Role::Under);
    signs.push_back(sign[c]);
    seen[c] = true;
  }
  auto d = GaussDiagram::from_passages(labels, roles, signs);
  for (int c = 0; c < doubles; ++c) d = make_double(d, static_cast<std::uint32_t>(c));
  return d;
}

std::vector<GaussDiagram> enumerate_mixed(int kmax) {
  std::vector<GaussDiagram> out;
  for (const auto& d : enumerate(kmax)) {
    const auto k = static_cast<std::uint32_t>(d.chord_count());
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      GaussDiagram x = d;
      for (std::uint32_t c = 0; c < k; ++c)
        if ((mask >> c) & 1u) x = make_double(x, c);
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end(), [](const GaussDiagram& a, const GaussDiagram& b) { return a.key() < b.key(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void FormulaTable::set(const GaussDiagram& d, Coeff c) {
  if (c == 0) entries.erase(d);
  else entries[d] = c;
}

Coeff FormulaTable::at(const GaussDiagram& d) const {
  auto it = entries.find(d);
  return it == entries.end() ? 0 : it->second;
}

Coeff eval_formula(const FormulaTable& table, const GaussDiagram& d) {
  if (d.double_count() != 0) throw std::invalid_argument("eval_formula: diagram has double chords");
  Coeff total = 0;
  for (const auto& [sub, c] : s(d)) total += c * table.at(sub);
  return total;
}

std::string to_json(const FormulaTable& table) {
  std::vector<std::pair<std::string, Coeff>> rows;
  for (const auto& [d, c] : table.entries) rows.emplace_back(d.key(), c);
  std::sort(rows.begin(), rows.end());
  nlohmann::ordered_json j;
  j["degree"] = table.degree;
  j["invariant"] = table.invariant;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, c] : rows) j["entries"].push_back({{"diagram", key}, {"coeff", c}});
  return j.dump(2) + "\n";
}

FormulaTable formula_table_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  FormulaTable t;
  t.degree = j.at("degree").get<int>();
  t.invariant = j.at("invariant").get<std::string>();
  for (const auto& e : j.at("entries"))
    t.set(parse_gauss(e.at("diagram").get<std::string>()), e.at("coeff").get<Coeff>());
  return t;
}

}  // namespace gpv
