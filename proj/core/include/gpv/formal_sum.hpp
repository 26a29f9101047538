#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace gpv {

using Coeff = std::int64_t;

/// Element of the free Z-module on an ordered key type.
///
/// Stored coefficients are never zero. Keys must be canonical, i.e. two
/// structurally equal objects compare equal.
template <class Key>
class FormalSum {
 public:
  using Terms = std::map<Key, Coeff>;
  using const_iterator = typename Terms::const_iterator;

  FormalSum() = default;
  explicit FormalSum(Key key, Coeff coeff = 1) { add(std::move(key), coeff); }

  void add(const Key& key, Coeff coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const FormalSum& other, Coeff scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  [[nodiscard]] Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  FormalSum& operator+=(const FormalSum& o) { add(o, 1); return *this; }
  FormalSum& operator-=(const FormalSum& o) { add(o, -1); return *this; }
  FormalSum& operator*=(Coeff s) {
    if (s == 0) terms_.clear();
    else for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(Coeff s, FormalSum a) { return a *= s; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

/// ca*a + cb*b.
template <class Key>
FormalSum<Key> combine(const FormalSum<Key>& a, const FormalSum<Key>& b,
                       Coeff ca, Coeff cb) {
  FormalSum<Key> out;
  out.add(a, ca);
  out.add(b, cb);
  return out;
}

/// Linear extension of f: sum over keys k of a[k] * f(k).
template <class Out, class Key, class F>
FormalSum<Out> extend(F&& f, const FormalSum<Key>& a) {
  FormalSum<Out> out;
  for (const auto& [k, c] : a) out.add(std::invoke(f, k), c);
  return out;
}

/// Dirac pairing: keys form an orthonormal basis.
template <class Key>
Coeff dirac(const FormalSum<Key>& a, const FormalSum<Key>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Coeff total = 0;
  for (const auto& [k, c] : small) total += c * large.coeff(k);
  return total;
}

/// Textual dump: one "<coefficient> <key>" line per term, sorted by key text.
template <class Key, class ToText>
std::string dump(const FormalSum<Key>& a, ToText&& to_text) {
  std::map<std::string, Coeff> sorted;
  for (const auto& [k, c] : a) sorted[std::invoke(to_text, k)] += c;
  std::string out;
  for (const auto& [text, c] : sorted) {
    if (c == 0) continue;
    out += (c > 0 ? "+" : "") + std::to_string(c);
    out += ' ';
    out += text;
    out += '\n';
  }
  return out;
}

}  // namespace gpv
