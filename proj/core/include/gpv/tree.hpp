#pragma once

#include <array>
#include <string>
#include <vector>

#include "gpv/formal_sum.hpp"
#include "gpv/gauss_diagram.hpp"

namespace gpv {

/// Half-edge slots of a crossing node. The strand met first runs
/// in1 -> out1; the second visit arrives through the stub (a snipped leaf
/// end) and leaves through out2.
enum Slot : int { kIn1 = 0, kOut1 = 1, kStub = 2, kOut2 = 3 };

enum class LeafKind : std::uint8_t { Root, Terminal, Snip, Stub };

/// A long-knot diagram cut open into a rooted planar tree.
///
/// Nodes carry the role of the first passage and the chord sign; together
/// they fix the cyclic order of the four half-edges (the rotation system).
/// Arcs are directed away from the root. Snip and stub leaves come in pairs
/// numbered 1..t in the order the snips are met along the strand.
class Tree {
 public:
  struct Endpoint {
    bool is_leaf = false;
    int id = 0;
    int slot = 0;  // node half-edge; unused for leaves
  };
  struct Arc {
    Endpoint from;
    Endpoint to;
  };
  struct Node {
    Role role = Role::Over;  // role of the first passage
    int sign = 1;
    std::array<int, 4> arcs{};  // arc id per Slot
  };
  struct Leaf {
    LeafKind kind = LeafKind::Root;
    int pair = 0;  // 1-based pair index for Snip/Stub, 0 otherwise
    int arc = 0;
  };

  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<Leaf>& leaves() const { return leaves_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }
  [[nodiscard]] std::size_t pair_count() const;

  /// Node whose in1 arc starts at another node, or -1 under the root leaf.
  [[nodiscard]] int parent(int node) const;

  /// Counterclockwise order of the half-edge slots around a node.
  [[nodiscard]] std::array<int, 4> rotation(int node) const;

  /// Nested serialization: `R[node(over,+)[out1,stub,out2]]` with leaves
  /// written `snipK`, `stubK` and `end`. Equal for trees equal up to relabeling.
  [[nodiscard]] std::string key() const;

  /// Same tree with one node's decoration replaced.
  [[nodiscard]] Tree with_decoration(int node, Role role, int sign) const;

  bool operator==(const Tree& o) const { return key() == o.key(); }
  bool operator<(const Tree& o) const { return key() < o.key(); }

  friend Tree cut_tree(const GaussDiagram& d);

 private:
  std::vector<Node> nodes_;
  std::vector<Leaf> leaves_;
  std::vector<Arc> arcs_;
};

/// The canonical tree: traverse the strand and snip just before every second
/// passage through a crossing.
Tree cut_tree(const GaussDiagram& d);

/// Glues paired leaves back together and reads off the diagram.
/// Throws std::invalid_argument if the gluing is not a single open strand.
GaussDiagram glue_tree(const Tree& t);

/// Arcs in order of first encounter on the right-first traversal from the root.
std::vector<int> arc_order(const Tree& t);

/// Leaves in the order the right-first traversal meets them; this is the
/// clockwise order around the complement of the tree.
std::vector<int> leaf_order(const Tree& t);

struct Subtree {
  std::vector<int> nodes;  // sorted
  std::vector<int> arcs;   // sorted
};

/// Minimal connected subtree spanning all double nodes. Throws
/// std::invalid_argument if the tree has no double node.
Subtree minimal_double_subtree(const Tree& t);

/// Where descent is measured from: the first passage through a double point,
/// or the start of the strand when there is none. The strand is read
/// cyclically from there, closing up through the point at infinity.
std::size_t descent_base(const GaussDiagram& d);

/// Whether a real chord is met first as under when reading from `base`.
bool met_first_as_under(const GaussDiagram& d, std::uint32_t chord, std::size_t base);

/// Every real crossing met first as over (reading from descent_base), and no
/// real node on the minimal subtree spanning the double nodes.
bool is_descending(const Tree& t);
bool is_descending(const GaussDiagram& d);
bool is_descending_sum(const FormalSum<GaussDiagram>& x);

std::string to_text(const Tree& t);

}  // namespace gpv
