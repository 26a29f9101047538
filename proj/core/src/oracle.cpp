#include "gpv/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace gpv {

using boost::multiprecision::cpp_int;

void LaurentPoly::set(int exponent, Coeff c) {
  if (c == 0) coeffs_.erase(exponent);
  else coeffs_[exponent] = c;
}

Coeff LaurentPoly::at(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

Coeff LaurentPoly::eval_at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : coeffs_)
    if (at(-e) != c) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    const Coeff mag = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    const bool show_mag = mag != 1 || e == 0;
    if (show_mag) out += std::to_string(mag);
    if (e != 0) {
      if (show_mag) out += '*';
      out += 't';
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

// Laurent polynomial with arbitrary-precision coefficients; c[i] is the
// coefficient of t^(low + i). Zero is the empty vector.
struct BigPoly {
  int low = 0;
  std::vector<cpp_int> c;

  void trim() {
    std::size_t b = 0;
    while (b < c.size() && c[b] == 0) ++b;
    std::size_t e = c.size();
    while (e > b && c[e - 1] == 0) --e;
    if (b == e) { c.clear(); low = 0; return; }
    c = std::vector<cpp_int>(c.begin() + static_cast<long>(b), c.begin() + static_cast<long>(e));
    low += static_cast<int>(b);
  }
  [[nodiscard]] bool zero() const { return c.empty(); }
  [[nodiscard]] int high() const { return low + static_cast<int>(c.size()) - 1; }
};

BigPoly mono(int e, long v) {
  BigPoly p;
  if (v == 0) return p;
  p.low = e;
  p.c = {cpp_int(v)};
  return p;
}

BigPoly add(const BigPoly& a, const BigPoly& b, int sb = 1) {
  if (a.zero() && b.zero()) return {};
  BigPoly r;
  if (a.zero()) { r = b; for (auto& x : r.c) x *= sb; return r; }
  if (b.zero()) return a;
  r.low = std::min(a.low, b.low);
  const int hi = std::max(a.high(), b.high());
  r.c.assign(static_cast<std::size_t>(hi - r.low + 1), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.low - r.low + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[b.low - r.low + i] += sb * b.c[i];
  r.trim();
  return r;
}

BigPoly mul(const BigPoly& a, const BigPoly& b) {
  if (a.zero() || b.zero()) return {};
  BigPoly r;
  r.low = a.low + b.low;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

// Exact quotient a / b; throws if b does not divide a.
BigPoly exact_div(const BigPoly& a, const BigPoly& b) {
  if (b.zero()) throw std::logic_error("division by zero polynomial");
  if (a.zero()) return {};
  std::vector<cpp_int> rem = a.c;
  const std::size_t nb = b.c.size();
  if (rem.size() < nb) throw std::logic_error("inexact polynomial division");
  std::vector<cpp_int> q(rem.size() - nb + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const cpp_int& top = rem[k + nb - 1];
    if (top == 0) continue;
    if (top % b.c.back() != 0) throw std::logic_error("inexact polynomial division");
    q[k] = top / b.c.back();
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= q[k] * b.c[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::logic_error("inexact polynomial division");
  BigPoly r;
  r.low = a.low - b.low;
  r.c = std::move(q);
  r.trim();
  return r;
}

// Fraction-free Gaussian elimination (Bareiss) over Z[t, 1/t].
BigPoly determinant(std::vector<std::vector<BigPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return mono(0, 1);
  int sign = 1;
  BigPoly prev = mono(0, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigPoly num = add(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]), -1);
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  BigPoly d = m[n - 1][n - 1];
  if (sign < 0) for (auto& x : d.c) x = -x;
  return d;
}

}  // namespace

LaurentPoly alexander(const PlanarDiagram& pd) {
  validate(pd);
  const std::size_t n = pd.crossings.size();
  if (n == 0) return LaurentPoly::constant(1);

  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < pd.strand.size(); ++i) pos[pd.strand[i]] = i;

  // Wirtinger generators: strand pieces between consecutive under-passages,
  // with the two open ends joined by the closure.
  std::vector<bool> starts_piece(pd.strand.size(), false);
  for (const auto& c : pd.crossings) {
    if (c.kind != ChordKind::Real)
      throw std::invalid_argument("alexander: diagram has double crossings");
    starts_piece[pos.at(c.arcs[2])] = true;
  }
  std::vector<std::size_t> gen(pd.strand.size());
  std::size_t g = 0;
  for (std::size_t i = 0; i < pd.strand.size(); ++i) {
    if (starts_piece[i]) ++g;
    gen[i] = g;
  }
  // Pieces after the last under-passage wrap around to piece 0.
  for (std::size_t i = 0; i < pd.strand.size(); ++i)
    if (gen[i] == g) gen[i] = 0;
  // g == n now (one generator per crossing).
  auto gen_of = [&](int arc) { return gen[pos.at(arc)]; };

  std::vector<std::vector<BigPoly>> m(n, std::vector<BigPoly>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& c = pd.crossings[r];
    const std::size_t over = gen_of(c.arcs[1]);
    const std::size_t in = gen_of(c.arcs[0]);
    const std::size_t out = gen_of(c.arcs[2]);
    if (c.sign > 0) {
      m[r][over] = add(m[r][over], add(mono(0, 1), mono(1, 1), -1));
      m[r][in] = add(m[r][in], mono(1, 1));
      m[r][out] = add(m[r][out], mono(0, -1));
    } else {
      m[r][over] = add(m[r][over], add(mono(1, 1), mono(0, 1), -1));
      m[r][in] = add(m[r][in], mono(0, 1));
      m[r][out] = add(m[r][out], mono(1, -1));
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  BigPoly d = determinant(std::move(m));
  if (d.zero()) throw std::logic_error("alexander: vanishing determinant");

  // Center the exponents, then fix the sign so that the value at 1 is +1.
  const int span = d.high() + d.low;
  if (span % 2 != 0) throw std::logic_error("alexander: asymmetric exponent span");
  const int shift = -span / 2;
  cpp_int at_one = 0;
  for (const auto& x : d.c) at_one += x;
  const int s = at_one < 0 ? -1 : 1;
  LaurentPoly out;
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (d.c[i] == 0) continue;
    const cpp_int v = s * d.c[i];
    if (v > cpp_int(INT64_MAX) || v < cpp_int(INT64_MIN))
      throw std::overflow_error("alexander: coefficient exceeds 64 bits");
    out.set(d.low + static_cast<int>(i) + shift, static_cast<Coeff>(v));
  }
  return out;
}

Coeff c2(const PlanarDiagram& pd) {
  const LaurentPoly a = alexander(pd);
  Coeff twice = 0;
  for (const auto& [e, c] : a.coefficients()) twice += c * e * (e - 1);
  return twice / 2;
}

Invariant c2_invariant() { return {"c2", 2, [](const PlanarDiagram& pd) { return c2(pd); }}; }

Invariant zero_invariant() { return {"zero", 0, [](const PlanarDiagram&) { return Coeff{0}; }}; }

Invariant invariant_by_name(const std::string& name) {
  if (name == "c2") return c2_invariant();
  if (name == "zero") return zero_invariant();
  throw std::invalid_argument("unknown invariant '" + name + "'");
}

Coeff eval_singular(const PlanarDiagram& pd, const Invariant& nu) {
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    if (pd.crossings[i].kind != ChordKind::Double) continue;
    PlanarDiagram positive = pd;
    positive.crossings[i].kind = ChordKind::Real;
    const PlanarDiagram negative = switch_planar(positive, i);
    return eval_singular(positive, nu) - eval_singular(negative, nu);
  }
  return nu.evaluate(pd);
}

Coeff eval_singular(const FormalSum<PlanarDiagram>& x, const Invariant& nu) {
  Coeff total = 0;
  for (const auto& [pd, c] : x) total += c * eval_singular(pd, nu);
  return total;
}

}  // namespace gpv
