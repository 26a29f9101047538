#pragma once

#include <cstdint>
#include <map>
#include <mutex>

#include "gpv/expansion.hpp"
#include "gpv/oracle.hpp"
#include "gpv/planar_diagram.hpp"
#include "gpv/tree.hpp"

namespace gpv {

enum class Routing { Standard, Reverse };

Routing routing_from_name(const std::string& name);

/// Rewrites every real crossing met first as under (reading from
/// descent_base) as the switched crossing minus a double point whose
/// positive resolution is the switched crossing.
FormalSum<Tree> step1_descend(const Tree& t);

/// True when the double nodes do not yet form a connected real-free subtree.
bool step2_applicable(const Tree& t);

/// Takes the first double node (in arc order) hanging below a real node and
/// slides its first passage back along the strand until it directly follows
/// a passage through another double point. Real passages keep their order,
/// as does the chord diagram of the double points. Throws
/// std::invalid_argument when not applicable.
Tree step2_clump(const Tree& t);

struct Normalized {
  FormalSum<Tree> terms;        // every term descending
  std::uint64_t discarded = 0;  // terms dropped for having more than n double points
};

/// Alternates step1/step2 until every term is descending. Throws
/// std::runtime_error past 2*(n+1)*(#chords+1) rounds.
Normalized normalize(const Tree& t, int n);

/// Closes the tree into a planar diagram. Paired leaves are joined by caps
/// drawn through the outer face, and a final cap joins the terminal end back
/// to the root end. Where two caps cross, the one met first when reading the
/// strand cyclically from descent_base passes over.
PlanarDiagram cap(const Tree& t, Routing routing = Routing::Standard);

FormalSum<PlanarDiagram> P(const DiagramSum& x, int n, Routing routing = Routing::Standard);
FormalSum<PlanarDiagram> P(const GaussDiagram& d, int n, Routing routing = Routing::Standard);

/// s . iota . P . s_inv
DiagramSum Q(const DiagramSum& x, int n);

/// Evaluates nu-bar = nu . eval_singular . P and omega = nu-bar . s_inv with
/// a per-diagram cache. Safe to share between threads.
class OmegaEvaluator {
 public:
  OmegaEvaluator(Invariant nu, int n, Routing routing = Routing::Standard);

  Coeff nu_bar(const GaussDiagram& d);
  Coeff nu_bar(const DiagramSum& x);
  Coeff omega(const GaussDiagram& b);

  [[nodiscard]] const Invariant& invariant() const { return nu_; }
  [[nodiscard]] int degree() const { return n_; }

 private:
  Invariant nu_;
  int n_;
  Routing routing_;
  std::mutex mu_;
  std::map<GaussDiagram, Coeff> cache_;
};

Coeff omega(const GaussDiagram& b, const Invariant& nu, int n);

/// omega over enumerate(n). `threads` = 0 picks the hardware concurrency.
FormulaTable omega_table(const Invariant& nu, int n, unsigned threads = 0);

}  // namespace gpv
