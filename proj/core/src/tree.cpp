#include "gpv/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace gpv {

namespace {

int rotation_sense(Role first_role, int sign) { return is_over(first_role) ? sign : -sign; }

const char* decoration_name(Role r) {
  switch (r) {
    case Role::Over: return "over";
    case Role::Under: return "under";
    case Role::DOver: return "dover";
    case Role::DUnder: return "dunder";
  }
  return "?";
}

}  // namespace

std::size_t Tree::pair_count() const {
  return static_cast<std::size_t>(std::count_if(
      leaves_.begin(), leaves_.end(), [](const Leaf& l) { return l.kind == LeafKind::Snip; }));
}

int Tree::parent(int node) const {
  const Arc& a = arcs_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(node)].arcs[kIn1])];
  return a.from.is_leaf ? -1 : a.from.id;
}

std::array<int, 4> Tree::rotation(int node) const {
  const Node& n = nodes_[static_cast<std::size_t>(node)];
  // With the first strand heading east, the second heads north when the
  // sense is positive and south otherwise.
  if (rotation_sense(n.role, n.sign) > 0) return {kOut1, kOut2, kIn1, kStub};
  return {kOut1, kStub, kIn1, kOut2};
}

namespace {

// Children of a node in right-first order: counterclockwise successors of in1.
std::array<int, 3> right_first_children(const Tree& t, int node) {
  const auto rot = t.rotation(node);
  const auto it = std::find(rot.begin(), rot.end(), static_cast<int>(kIn1));
  const auto i = static_cast<std::size_t>(it - rot.begin());
  return {rot[(i + 1) % 4], rot[(i + 2) % 4], rot[(i + 3) % 4]};
}

template <class OnArc, class OnLeaf>
void right_first_walk(const Tree& t, OnArc&& on_arc, OnLeaf&& on_leaf) {
  const int root_arc = t.leaves()[0].arc;
  on_leaf(0);
  std::function<void(int)> visit = [&](int arc) {
    on_arc(arc);
    const Tree::Endpoint& to = t.arcs()[static_cast<std::size_t>(arc)].to;
    if (to.is_leaf) {
      on_leaf(to.id);
      return;
    }
    for (int slot : right_first_children(t, to.id))
      visit(t.nodes()[static_cast<std::size_t>(to.id)].arcs[static_cast<std::size_t>(slot)]);
  };
  visit(root_arc);
}

}  // namespace

std::string Tree::key() const {
  std::function<std::string(const Endpoint&)> sub = [&](const Endpoint& e) -> std::string {
    if (e.is_leaf) {
      const Leaf& l = leaves_[static_cast<std::size_t>(e.id)];
      switch (l.kind) {
        case LeafKind::Terminal: return "end";
        case LeafKind::Snip: return "snip" + std::to_string(l.pair);
        case LeafKind::Stub: return "stub" + std::to_string(l.pair);
        case LeafKind::Root: return "root";
      }
    }
    const Node& n = nodes_[static_cast<std::size_t>(e.id)];
    std::string s = "node(";
    s += decoration_name(n.role);
    s += n.sign > 0 ? ",+)[" : ",-)[";
    bool first = true;
    for (int slot : {kOut1, kStub, kOut2}) {
      if (!first) s += ',';
      first = false;
      s += sub(arcs_[static_cast<std::size_t>(n.arcs[static_cast<std::size_t>(slot)])].to);
    }
    return s + "]";
  };
  return "R[" + sub(arcs_[static_cast<std::size_t>(leaves_[0].arc)].to) + "]";
}

std::string to_text(const Tree& t) { return t.key(); }

Tree Tree::with_decoration(int node, Role role, int sign) const {
  Tree out = *this;
  auto& n = out.nodes_.at(static_cast<std::size_t>(node));
  if (rotation_sense(n.role, n.sign) != rotation_sense(role, sign))
    throw std::invalid_argument("decoration change would alter the rotation system");
  n.role = role;
  n.sign = sign;
  return out;
}

Tree cut_tree(const GaussDiagram& d) {
  Tree t;
  const auto& ps = d.passages();
  const std::size_t n = ps.size();
  t.nodes_.resize(d.chord_count());
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    t.nodes_[c].role = d.first_role(c);
    t.nodes_[c].sign = d.chord(c).sign;
  }
  std::vector<bool> seen(d.chord_count(), false);
  std::vector<bool> is_first(n);
  for (std::size_t i = 0; i < n; ++i) {
    is_first[i] = !seen[ps[i].chord];
    seen[ps[i].chord] = true;
  }

  auto add_leaf = [&](LeafKind kind, int pair) {
    t.leaves_.push_back({kind, pair, 0});
    return static_cast<int>(t.leaves_.size() - 1);
  };
  auto add_arc = [&](Tree::Endpoint from, Tree::Endpoint to) {
    const int id = static_cast<int>(t.arcs_.size());
    t.arcs_.push_back({from, to});
    for (const auto& e : {from, to}) {
      if (e.is_leaf) t.leaves_[static_cast<std::size_t>(e.id)].arc = id;
      else t.nodes_[static_cast<std::size_t>(e.id)].arcs[static_cast<std::size_t>(e.slot)] = id;
    }
  };

  const int root = add_leaf(LeafKind::Root, 0);
  Tree::Endpoint tail{true, root, 0};
  int pair = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int c = static_cast<int>(ps[i].chord);
    if (is_first[i]) {
      add_arc(tail, {false, c, kIn1});
      tail = {false, c, kOut1};
    } else {
      ++pair;
      const int snip = add_leaf(LeafKind::Snip, pair);
      add_arc(tail, {true, snip, 0});
      const int stub = add_leaf(LeafKind::Stub, pair);
      add_arc({false, c, kStub}, {true, stub, 0});
      tail = {false, c, kOut2};
    }
  }
  const int term = add_leaf(LeafKind::Terminal, 0);
  add_arc(tail, {true, term, 0});
  return t;
}

GaussDiagram glue_tree(const Tree& t) {
  const auto& leaves = t.leaves();
  const auto& arcs = t.arcs();
  const auto& nodes = t.nodes();
  std::vector<int> stub_of_pair(leaves.size() + 1, -1);
  int roots = 0, terminals = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto& l = leaves[i];
    if (l.kind == LeafKind::Root) ++roots;
    if (l.kind == LeafKind::Terminal) ++terminals;
    if (l.kind == LeafKind::Stub) {
      if (l.pair <= 0 || static_cast<std::size_t>(l.pair) > leaves.size() ||
          stub_of_pair[static_cast<std::size_t>(l.pair)] != -1)
        throw std::invalid_argument("glue: bad leaf pairing");
      stub_of_pair[static_cast<std::size_t>(l.pair)] = static_cast<int>(i);
    }
  }
  if (roots != 1 || terminals != 1 || leaves.empty() || leaves[0].kind != LeafKind::Root)
    throw std::invalid_argument("glue: tree must have one root end and one terminal end");

  std::vector<std::uint32_t> labels;
  std::vector<Role> roles;
  std::vector<int> signs;
  std::vector<int> visits(nodes.size(), 0);
  std::vector<bool> arc_used(arcs.size(), false);
  auto use = [&](int arc) {
    if (arc_used[static_cast<std::size_t>(arc)])
      throw std::invalid_argument("glue: leaf pairing does not yield a single open strand");
    arc_used[static_cast<std::size_t>(arc)] = true;
  };

  int arc = leaves[0].arc;
  for (;;) {
    use(arc);
    const Tree::Endpoint to = arcs[static_cast<std::size_t>(arc)].to;
    if (to.is_leaf) {
      const auto& l = leaves[static_cast<std::size_t>(to.id)];
      if (l.kind == LeafKind::Terminal) break;
      if (l.kind != LeafKind::Snip) throw std::invalid_argument("glue: strand runs into a stub");
      const int stub = stub_of_pair[static_cast<std::size_t>(l.pair)];
      if (stub < 0) throw std::invalid_argument("glue: snip without matching stub");
      const int stub_arc = leaves[static_cast<std::size_t>(stub)].arc;
      use(stub_arc);
      const Tree::Endpoint node = arcs[static_cast<std::size_t>(stub_arc)].from;
      if (node.is_leaf || node.slot != kStub) throw std::invalid_argument("glue: stub not on a node");
      const auto& nd = nodes[static_cast<std::size_t>(node.id)];
      if (++visits[static_cast<std::size_t>(node.id)] != 2)
        throw std::invalid_argument("glue: leaf pairing does not yield a single open strand");
      labels.push_back(static_cast<std::uint32_t>(node.id + 1));
      roles.push_back(complement(nd.role));
      signs.push_back(nd.sign);
      arc = nd.arcs[kOut2];
      continue;
    }
    if (to.slot != kIn1) throw std::invalid_argument("glue: arc enters a node away from in1");
    const auto& nd = nodes[static_cast<std::size_t>(to.id)];
    if (++visits[static_cast<std::size_t>(to.id)] != 1)
      throw std::invalid_argument("glue: leaf pairing does not yield a single open strand");
    labels.push_back(static_cast<std::uint32_t>(to.id + 1));
    roles.push_back(nd.role);
    signs.push_back(nd.sign);
    arc = nd.arcs[kOut1];
  }
  for (int v : visits)
    if (v != 2) throw std::invalid_argument("glue: leaf pairing does not yield a single open strand");
  return GaussDiagram::from_passages(labels, roles, signs);
}

std::vector<int> arc_order(const Tree& t) {
  std::vector<int> out;
  right_first_walk(t, [&](int a) { out.push_back(a); }, [](int) {});
  return out;
}

std::vector<int> leaf_order(const Tree& t) {
  std::vector<int> out;
  right_first_walk(t, [](int) {}, [&](int l) { out.push_back(l); });
  return out;
}

Subtree minimal_double_subtree(const Tree& t) {
  std::vector<int> doubles;
  for (std::size_t i = 0; i < t.nodes().size(); ++i)
    if (is_double(t.nodes()[i].role)) doubles.push_back(static_cast<int>(i));
  if (doubles.empty()) throw std::invalid_argument("tree has no double node");

  auto ancestors = [&](int v) {
    std::vector<int> chain;
    for (; v >= 0; v = t.parent(v)) chain.push_back(v);
    return chain;  // v, parent(v), ..., top
  };
  // Common ancestors of all doubles; the deepest one is the subtree's top.
  std::vector<int> common = ancestors(doubles[0]);
  for (std::size_t k = 1; k < doubles.size(); ++k) {
    const auto chain = ancestors(doubles[k]);
    const std::set<int> in_chain(chain.begin(), chain.end());
    std::erase_if(common, [&](int v) { return !in_chain.contains(v); });
  }
  const int top = common.front();

  std::set<int> nodes{top};
  std::set<int> arcs;
  for (int d : doubles)
    for (int v = d; v != top; v = t.parent(v)) {
      nodes.insert(v);
      arcs.insert(t.nodes()[static_cast<std::size_t>(v)].arcs[kIn1]);
    }
  return {{nodes.begin(), nodes.end()}, {arcs.begin(), arcs.end()}};
}

std::size_t descent_base(const GaussDiagram& d) {
  const auto& ps = d.passages();
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (is_double(ps[i].role)) return i;
  return 0;
}

bool met_first_as_under(const GaussDiagram& d, std::uint32_t chord, std::size_t base) {
  const bool wraps = d.first_position(chord) < base && base <= d.second_position(chord);
  const Role r = d.first_role(chord);
  return wraps ? r == Role::Over : r == Role::Under;
}

bool is_descending(const Tree& t) {
  const auto g = glue_tree(t);
  const auto base = descent_base(g);
  bool any_double = false;
  for (std::uint32_t c = 0; c < g.chord_count(); ++c) {
    if (g.chord(c).kind == ChordKind::Double) any_double = true;
    else if (met_first_as_under(g, c, base)) return false;
  }
  if (!any_double) return true;
  for (int v : minimal_double_subtree(t).nodes)
    if (!is_double(t.nodes()[static_cast<std::size_t>(v)].role)) return false;
  return true;
}

bool is_descending(const GaussDiagram& d) { return is_descending(cut_tree(d)); }

bool is_descending_sum(const FormalSum<GaussDiagram>& x) {
  return std::all_of(x.begin(), x.end(), [](const auto& term) { return is_descending(term.first); });
}

}  // namespace gpv
