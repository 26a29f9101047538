#include "gpv/projection.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace gpv {

Routing routing_from_name(const std::string& name) {
  if (name == "standard") return Routing::Standard;
  if (name == "reverse") return Routing::Reverse;
  throw std::invalid_argument("unknown routing: " + name);
}

// ---------------------------------------------------------------- steps 1-3

FormalSum<Tree> step1_descend(const Tree& t) {
  FormalSum<Tree> acc(t);
  const auto g = glue_tree(t);
  const auto base = descent_base(g);
  for (std::size_t v = 0; v < t.nodes().size(); ++v) {
    const auto& node = t.nodes()[v];
    if (is_double(node.role) || !met_first_as_under(g, static_cast<std::uint32_t>(v), base)) continue;
    const Role flipped = complement(node.role);
    const Role as_double = flipped == Role::Over ? Role::DOver : Role::DUnder;
    FormalSum<Tree> next;
    for (const auto& [term, c] : acc) {
      const int node_id = static_cast<int>(v);
      next.add(term.with_decoration(node_id, flipped, -node.sign), c);
      next.add(term.with_decoration(node_id, as_double, -node.sign), -c);
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

// Doubles, other than the first one met, whose first passage directly
// follows a real passage; sorted by position of their in1 arc in arc order.
std::vector<std::uint32_t> loose_doubles(const GaussDiagram& g, const Tree& t) {
  const auto& ps = g.passages();
  std::vector<std::uint32_t> doubles;
  for (std::uint32_t c = 0; c < g.chord_count(); ++c)
    if (g.chord(c).kind == ChordKind::Double) doubles.push_back(c);
  std::vector<std::uint32_t> loose;
  for (std::size_t k = 1; k < doubles.size(); ++k) {
    const auto f = g.first_position(doubles[k]);
    if (!is_double(ps[f - 1].role)) loose.push_back(doubles[k]);
  }
  const auto order = arc_order(t);
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = i;
  std::sort(loose.begin(), loose.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto ra = rank[static_cast<std::size_t>(t.nodes()[a].arcs[kIn1])];
    const auto rb = rank[static_cast<std::size_t>(t.nodes()[b].arcs[kIn1])];
    return ra < rb;
  });
  return loose;
}

}  // namespace

bool step2_applicable(const Tree& t) {
  const auto g = glue_tree(t);
  return !loose_doubles(g, t).empty();
}

Tree step2_clump(const Tree& t) {
  const auto g = glue_tree(t);
  const auto loose = loose_doubles(g, t);
  if (loose.empty()) throw std::invalid_argument("step2: double points already clumped");
  const auto& ps = g.passages();
  const auto f = g.first_position(loose.front());
  std::size_t dest = f;
  while (!is_double(ps[dest - 1].role)) --dest;

  std::vector<Passage> moved(ps.begin(), ps.end());
  std::rotate(moved.begin() + static_cast<std::ptrdiff_t>(dest),
              moved.begin() + static_cast<std::ptrdiff_t>(f),
              moved.begin() + static_cast<std::ptrdiff_t>(f + 1));
  std::vector<std::uint32_t> labels;
  std::vector<Role> roles;
  std::vector<int> signs;
  for (const auto& p : moved) {
    labels.push_back(p.chord);
    roles.push_back(p.role);
    signs.push_back(g.chord(p.chord).sign);
  }
  return cut_tree(GaussDiagram::from_passages(labels, roles, signs));
}

Normalized normalize(const Tree& t, int n) {
  if (n < 0) throw std::invalid_argument("normalize: degree must be >= 0");
  const auto bound = 2 * static_cast<std::size_t>(n + 1) * (t.nodes().size() + 1);
  Normalized out;
  FormalSum<Tree> work(t);
  for (std::size_t round = 0; !work.empty(); ++round) {
    if (round > bound) throw std::runtime_error("normalize: iteration bound exceeded");
    FormalSum<Tree> next;
    for (const auto& [term, c] : work) {
      const auto doubles = static_cast<int>(std::count_if(
          term.nodes().begin(), term.nodes().end(),
          [](const Tree::Node& v) { return is_double(v.role); }));
      if (doubles > n) {
        ++out.discarded;
        continue;
      }
      const auto g = glue_tree(term);
      const auto base = descent_base(g);
      bool has_under = false;
      for (std::uint32_t k = 0; k < g.chord_count() && !has_under; ++k)
        has_under = g.chord(k).kind == ChordKind::Real && met_first_as_under(g, k, base);
      if (has_under) next.add(step1_descend(term), c);
      else if (step2_applicable(term)) next.add(step2_clump(term), c);
      else out.terms.add(term, c);
    }
    work = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- step 4

namespace {

using i128 = __int128;

struct Pt {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

i128 orient(Pt a, Pt b, Pt c) {
  return static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
}

int sgn(i128 v) { return (v > 0) - (v < 0); }

struct Degenerate {};

// Position of a crossing along a cap: segment index, then t = num/den in (0,1).
struct Along {
  std::size_t seg = 0;
  i128 num = 0;
  i128 den = 1;
  bool operator<(const Along& o) const {
    if (seg != o.seg) return seg < o.seg;
    return num * o.den < o.num * den;
  }
  bool operator==(const Along& o) const { return seg == o.seg && num * o.den == o.num * den; }
};

struct CapCrossing {
  Along along;
  std::uint32_t label = 0;
  Role role = Role::Over;
  int sign = 1;
};

std::uint64_t mix(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

struct CapLayout {
  std::vector<std::vector<CapCrossing>> on_cap;  // sorted along each cap
};

CapLayout layout_caps(const Tree& t, Routing routing, std::uint32_t first_label, unsigned attempt,
                      const std::vector<std::int64_t>& rank) {
  constexpr std::int64_t kSpacing = 1024;
  const auto order = leaf_order(t);
  std::vector<std::int64_t> index_of(t.leaves().size());
  for (std::size_t i = 0; i < order.size(); ++i) index_of[static_cast<std::size_t>(order[i])] = static_cast<std::int64_t>(i);

  // Boundary of the outer face, clockwise, laid out right to left on y = x^2.
  auto boundary = [&](int leaf) {
    const auto q = index_of[static_cast<std::size_t>(leaf)];
    std::int64_t jitter = 0;
    if (attempt > 0) jitter = static_cast<std::int64_t>(mix(attempt * 1000003ULL + static_cast<std::uint64_t>(q)) % 97);
    const std::int64_t x = -(kSpacing * q + jitter);
    return Pt{x, x * x};
  };

  // Caps: leaf pairs in pair order, then terminal -> root.
  const std::size_t pairs = t.pair_count();
  std::vector<int> snip(pairs + 1, -1), stub(pairs + 1, -1);
  int terminal = -1;
  for (std::size_t i = 0; i < t.leaves().size(); ++i) {
    const auto& l = t.leaves()[i];
    if (l.kind == LeafKind::Snip) snip[static_cast<std::size_t>(l.pair)] = static_cast<int>(i);
    if (l.kind == LeafKind::Stub) stub[static_cast<std::size_t>(l.pair)] = static_cast<int>(i);
    if (l.kind == LeafKind::Terminal) terminal = static_cast<int>(i);
  }
  std::vector<std::vector<Pt>> paths;
  for (std::size_t p = 1; p <= pairs; ++p) paths.push_back({boundary(snip[p]), boundary(stub[p])});
  paths.push_back({boundary(terminal), boundary(0)});

  if (routing == Routing::Reverse) {
    // Each cap bends through its own interior point, later caps nearer the middle.
    const std::int64_t width = kSpacing * static_cast<std::int64_t>(order.size() - 1);
    const std::size_t m = paths.size();
    for (std::size_t j = 0; j < m; ++j) {
      const auto r = static_cast<std::int64_t>(m - 1 - j);
      std::int64_t jitter = 0;
      if (attempt > 0) jitter = static_cast<std::int64_t>(mix(attempt * 7919ULL + j) % 89);
      const std::int64_t hx = -width / 2 + 37 * r + jitter;
      const std::int64_t hy = hx * hx + width * width / 8 + 53 * r * static_cast<std::int64_t>(order.size());
      paths[j].insert(paths[j].begin() + 1, Pt{hx, hy});
    }
  }

  CapLayout out;
  out.on_cap.resize(paths.size());
  std::uint32_t label = first_label;
  for (std::size_t a = 0; a < paths.size(); ++a)
    for (std::size_t b = a + 1; b < paths.size(); ++b)
      for (std::size_t sa = 0; sa + 1 < paths[a].size(); ++sa)
        for (std::size_t sb = 0; sb + 1 < paths[b].size(); ++sb) {
          const Pt p1 = paths[a][sa], p2 = paths[a][sa + 1];
          const Pt p3 = paths[b][sb], p4 = paths[b][sb + 1];
          const i128 d1 = orient(p3, p4, p1), d2 = orient(p3, p4, p2);
          const i128 d3 = orient(p1, p2, p3), d4 = orient(p1, p2, p4);
          if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0) throw Degenerate{};
          if (sgn(d1) == sgn(d2) || sgn(d3) == sgn(d4)) continue;
          Along on_a{sa, d1, d1 - d2};
          Along on_b{sb, d3, d3 - d4};
          for (Along* al : {&on_a, &on_b})
            if (al->den < 0) {
              al->num = -al->num;
              al->den = -al->den;
            }
          const Pt da{p2.x - p1.x, p2.y - p1.y};
          const Pt db{p4.x - p3.x, p4.y - p3.y};
          const int sign = sgn(orient(Pt{0, 0}, da, db));
          // the cap met first from the descent base passes over
          const bool a_over = rank[a] < rank[b];
          const int sign_ab = a_over ? sign : -sign;
          out.on_cap[a].push_back({on_a, label, a_over ? Role::Over : Role::Under, sign_ab});
          out.on_cap[b].push_back({on_b, label, a_over ? Role::Under : Role::Over, sign_ab});
          ++label;
        }
  for (auto& v : out.on_cap) {
    std::sort(v.begin(), v.end(), [](const CapCrossing& x, const CapCrossing& y) { return x.along < y.along; });
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].along == v[i - 1].along) throw Degenerate{};
  }
  return out;
}

}  // namespace

PlanarDiagram cap(const Tree& t, Routing routing) {
  const auto g = glue_tree(t);
  const auto n = static_cast<std::uint32_t>(g.chord_count());
  // Caps sit in the gaps before second passages, the terminal cap in the gap
  // at infinity. Rank them by the order they are met reading from the base.
  const auto cycle = static_cast<std::int64_t>(g.passages().size()) + 1;
  const auto base = static_cast<std::int64_t>(descent_base(g));
  auto gap_rank = [&](std::int64_t pos) { return ((pos - base) % cycle + cycle) % cycle; };
  std::vector<std::int64_t> rank;
  {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < g.passages().size(); ++i) {
      const auto c = g.passages()[i].chord;
      if (seen[c]) rank.push_back(gap_rank(static_cast<std::int64_t>(i)));
      seen[c] = true;
    }
    rank.push_back(gap_rank(cycle - 1));
  }
  for (unsigned attempt = 0;; ++attempt) {
    CapLayout layout;
    try {
      layout = layout_caps(t, routing, n, attempt, rank);
    } catch (const Degenerate&) {
      if (attempt > 64) throw std::runtime_error("cap: no generic layout found");
      continue;
    }
    std::vector<std::uint32_t> labels;
    std::vector<Role> roles;
    std::vector<int> signs;
    auto emit_cap = [&](std::size_t idx) {
      for (const auto& x : layout.on_cap[idx]) {
        labels.push_back(x.label);
        roles.push_back(x.role);
        signs.push_back(x.sign);
      }
    };
    std::vector<bool> seen(n, false);
    std::size_t pair = 0;
    for (const auto& p : g.passages()) {
      if (seen[p.chord]) emit_cap(pair++);
      seen[p.chord] = true;
      labels.push_back(p.chord);
      roles.push_back(p.role);
      signs.push_back(g.chord(p.chord).sign);
    }
    emit_cap(pair);
    return planar_from_gauss(GaussDiagram::from_passages(labels, roles, signs));
  }
}

// ---------------------------------------------------------------- P, Q, omega

FormalSum<PlanarDiagram> P(const GaussDiagram& d, int n, Routing routing) {
  const auto normal = normalize(cut_tree(d), n);
  FormalSum<PlanarDiagram> out;
  for (const auto& [t, c] : normal.terms) out.add(cap(t, routing), c);
  return out;
}

FormalSum<PlanarDiagram> P(const DiagramSum& x, int n, Routing routing) {
  FormalSum<PlanarDiagram> out;
  for (const auto& [d, c] : x) out.add(P(d, n, routing), c);
  return out;
}

DiagramSum Q(const DiagramSum& x, int n) {
  const auto projected = P(s_inv(x), n);
  return s(extend<GaussDiagram>([](const PlanarDiagram& pd) { return gauss_from_planar(pd); }, projected));
}

OmegaEvaluator::OmegaEvaluator(Invariant nu, int n, Routing routing)
    : nu_(std::move(nu)), n_(n), routing_(routing) {}

Coeff OmegaEvaluator::nu_bar(const GaussDiagram& d) {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(d); it != cache_.end()) return it->second;
  }
  const Coeff v = eval_singular(P(d, n_, routing_), nu_);
  std::lock_guard lock(mu_);
  cache_.emplace(d, v);
  return v;
}

Coeff OmegaEvaluator::nu_bar(const DiagramSum& x) {
  Coeff total = 0;
  for (const auto& [d, c] : x) total += c * nu_bar(d);
  return total;
}

Coeff OmegaEvaluator::omega(const GaussDiagram& b) { return nu_bar(s_inv(b)); }

Coeff omega(const GaussDiagram& b, const Invariant& nu, int n) {
  OmegaEvaluator ev(nu, n);
  return ev.omega(b);
}

FormulaTable omega_table(const Invariant& nu, int n, unsigned threads) {
  const auto domain = enumerate(n);
  std::vector<Coeff> values(domain.size(), 0);
  OmegaEvaluator ev(nu, n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < domain.size();) values[i] = ev.omega(domain[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  FormulaTable table;
  table.degree = n;
  table.invariant = nu.name;
  for (std::size_t i = 0; i < domain.size(); ++i) table.set(domain[i], values[i]);
  return table;
}

}  // namespace gpv
