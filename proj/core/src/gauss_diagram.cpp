#include "gpv/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace gpv {

GaussDiagram GaussDiagram::from_passages(std::span<const std::uint32_t> labels,
                                         std::span<const Role> roles,
                                         std::span<const int> signs) {
  if (labels.size() != roles.size() || labels.size() != signs.size())
    throw ParseError("passage arrays differ in length");

  struct Seen {
    std::uint32_t id;
    std::size_t count;
    Role role;
    int sign;
  };
  std::unordered_map<std::uint32_t, Seen> seen;
  GaussDiagram d;
  d.passages_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int s = signs[i];
    if (s != 1 && s != -1) throw ParseError("sign must be +1 or -1");
    auto it = seen.find(labels[i]);
    if (it == seen.end()) {
      const auto id = static_cast<std::uint32_t>(d.chords_.size());
      seen.emplace(labels[i], Seen{id, 1, roles[i], s});
      d.chords_.push_back({is_double(roles[i]) ? ChordKind::Double : ChordKind::Real, s});
      d.passages_.push_back({id, roles[i]});
      continue;
    }
    Seen& prev = it->second;
    const std::string name = std::to_string(labels[i]);
    if (++prev.count > 2) throw ParseError("chord " + name + " appears more than twice");
    if (is_double(prev.role) != is_double(roles[i]))
      throw ParseError("chord " + name + " mixes real and double passages");
    if (roles[i] != complement(prev.role))
      throw ParseError("chord " + name + " has both passages with the same role");
    if (prev.sign != s) throw ParseError("chord " + name + " has mismatched signs");
    d.passages_.push_back({prev.id, roles[i]});
  }
  for (const auto& [label, s] : seen)
    if (s.count != 2)
      throw ParseError("chord " + std::to_string(label) + " appears only once");
  return d;
}

std::size_t GaussDiagram::real_count() const {
  return static_cast<std::size_t>(std::count_if(
      chords_.begin(), chords_.end(), [](const Chord& c) { return c.kind == ChordKind::Real; }));
}

std::size_t GaussDiagram::double_count() const { return chords_.size() - real_count(); }

const Chord& GaussDiagram::chord(std::uint32_t id) const {
  if (id >= chords_.size()) throw std::out_of_range("unknown chord id " + std::to_string(id + 1));
  return chords_[id];
}

std::size_t GaussDiagram::first_position(std::uint32_t id) const {
  for (std::size_t i = 0; i < passages_.size(); ++i)
    if (passages_[i].chord == id) return i;
  throw std::out_of_range("unknown chord id " + std::to_string(id + 1));
}

std::size_t GaussDiagram::second_position(std::uint32_t id) const {
  for (std::size_t i = passages_.size(); i-- > 0;)
    if (passages_[i].chord == id) return i;
  throw std::out_of_range("unknown chord id " + std::to_string(id + 1));
}

Role GaussDiagram::first_role(std::uint32_t id) const {
  return passages_[first_position(id)].role;
}

std::string GaussDiagram::key() const {
  std::string out;
  for (std::size_t i = 0; i < passages_.size(); ++i) {
    if (i) out += ' ';
    switch (passages_[i].role) {
      case Role::Over: out += 'O'; break;
      case Role::Under: out += 'U'; break;
      case Role::DOver: out += "DO"; break;
      case Role::DUnder: out += "DU"; break;
    }
    out += std::to_string(passages_[i].chord + 1);
    out += chords_[passages_[i].chord].sign > 0 ? '+' : '-';
  }
  return out;
}

std::string to_text(const GaussDiagram& d) { return d.key(); }

GaussDiagram parse_gauss(std::string_view text) {
  std::vector<std::uint32_t> labels;
  std::vector<Role> roles;
  std::vector<int> signs;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    Role role;
    if (tok.starts_with("DO")) { role = Role::DOver; pos = 2; }
    else if (tok.starts_with("DU")) { role = Role::DUnder; pos = 2; }
    else if (tok.starts_with("O")) { role = Role::Over; pos = 1; }
    else if (tok.starts_with("U")) { role = Role::Under; pos = 1; }
    else throw ParseError("malformed token '" + tok + "'");
    if (tok.size() < pos + 2) throw ParseError("malformed token '" + tok + "'");
    const char sc = tok.back();
    if (sc != '+' && sc != '-') throw ParseError("malformed token '" + tok + "': missing sign");
    const std::string_view digits(tok.data() + pos, tok.size() - pos - 1);
    std::uint32_t id = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
    if (ec != std::errc{} || p != digits.data() + digits.size() || id == 0)
      throw ParseError("malformed token '" + tok + "': bad chord id");
    labels.push_back(id);
    roles.push_back(role);
    signs.push_back(sc == '+' ? 1 : -1);
  }
  return GaussDiagram::from_passages(labels, roles, signs);
}

namespace {

// Rebuilds a diagram after editing raw passage data.
GaussDiagram rebuild(const GaussDiagram& d, const std::vector<Role>& roles,
                     const std::vector<int>& chord_signs,
                     const std::vector<bool>& keep_chord) {
  std::vector<std::uint32_t> labels;
  std::vector<Role> rs;
  std::vector<int> signs;
  const auto& ps = d.passages();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!keep_chord[ps[i].chord]) continue;
    labels.push_back(ps[i].chord);
    rs.push_back(roles[i]);
    signs.push_back(chord_signs[ps[i].chord]);
  }
  return GaussDiagram::from_passages(labels, rs, signs);
}

struct RawEdit {
  std::vector<Role> roles;
  std::vector<int> signs;
  std::vector<bool> keep;
  explicit RawEdit(const GaussDiagram& d) : keep(d.chord_count(), true) {
    for (const auto& p : d.passages()) roles.push_back(p.role);
    for (const auto& c : d.chords()) signs.push_back(c.sign);
  }
};

}  // namespace

GaussDiagram switch_crossing(const GaussDiagram& d, std::uint32_t id) {
  if (d.chord(id).kind != ChordKind::Real)
    throw std::invalid_argument("switch: chord " + std::to_string(id + 1) + " is a double point");
  RawEdit e(d);
  for (std::size_t i = 0; i < d.passages().size(); ++i)
    if (d.passages()[i].chord == id) e.roles[i] = complement(e.roles[i]);
  e.signs[id] = -e.signs[id];
  return rebuild(d, e.roles, e.signs, e.keep);
}

GaussDiagram make_double(const GaussDiagram& d, std::uint32_t id) {
  if (d.chord(id).kind != ChordKind::Real)
    throw std::invalid_argument("chord " + std::to_string(id + 1) + " is already double");
  RawEdit e(d);
  for (std::size_t i = 0; i < d.passages().size(); ++i)
    if (d.passages()[i].chord == id)
      e.roles[i] = e.roles[i] == Role::Over ? Role::DOver : Role::DUnder;
  return rebuild(d, e.roles, e.signs, e.keep);
}

FormalSum<GaussDiagram> resolve_double(const GaussDiagram& d, std::uint32_t id) {
  if (d.chord(id).kind != ChordKind::Double)
    throw std::invalid_argument("resolve: chord " + std::to_string(id + 1) + " is real");
  RawEdit e(d);
  for (std::size_t i = 0; i < d.passages().size(); ++i)
    if (d.passages()[i].chord == id)
      e.roles[i] = e.roles[i] == Role::DOver ? Role::Over : Role::Under;
  GaussDiagram positive = rebuild(d, e.roles, e.signs, e.keep);
  // Canonical numbering is unchanged by role edits, so the id still applies.
  FormalSum<GaussDiagram> out(positive, 1);
  out.add(switch_crossing(positive, id), -1);
  return out;
}

GaussDiagram subdiagram(const GaussDiagram& d, std::span<const std::uint32_t> keep_real) {
  RawEdit e(d);
  for (std::uint32_t c = 0; c < d.chord_count(); ++c)
    e.keep[c] = d.chords()[c].kind == ChordKind::Double;
  for (auto id : keep_real) {
    if (d.chord(id).kind != ChordKind::Real)
      throw std::invalid_argument("subdiagram: chord " + std::to_string(id + 1) + " is a double point");
    e.keep[id] = true;
  }
  return rebuild(d, e.roles, e.signs, e.keep);
}

std::vector<std::uint32_t> real_chords(const GaussDiagram& d) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c)
    if (d.chords()[c].kind == ChordKind::Real) out.push_back(c);
  return out;
}

GaussDiagram subdiagram_mask(const GaussDiagram& d, std::uint64_t mask) {
  RawEdit e(d);
  std::size_t bit = 0;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    if (d.chords()[c].kind == ChordKind::Double) continue;
    e.keep[c] = (mask >> bit) & 1U;
    ++bit;
  }
  return rebuild(d, e.roles, e.signs, e.keep);
}

}  // namespace gpv
