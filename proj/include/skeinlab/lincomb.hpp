#pragma once
// Finite formal linear combinations with HalfLaurent coefficients.

#include "skeinlab/scalar.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace skeinlab {

template <class Key, class Compare = std::less<Key>>
class LinComb {
 public:
  using Map = std::map<Key, HalfLaurent, Compare>;

  LinComb() = default;
  explicit LinComb(const Key& k, const HalfLaurent& c = HalfLaurent(1)) { add(k, c); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Key& k, const HalfLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add_scaled(const LinComb& o, const HalfLaurent& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }

  HalfLaurent coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? HalfLaurent() : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  LinComb operator-() const {
    LinComb r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const HalfLaurent& c, const LinComb& a) {
    LinComb r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, v * c);
    return r;
  }
  friend LinComb operator*(const LinComb& a, const HalfLaurent& c) { return c * a; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }
  friend bool operator<(const LinComb& a, const LinComb& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const auto& x, const auto& y) {
                                          if (Compare{}(x.first, y.first)) return true;
                                          if (Compare{}(y.first, x.first)) return false;
                                          return x.second < y.second;
                                        });
  }

  // Linear extension of f: Key -> LinComb<K2>.
  template <class Out, class F>
  Out map_linear(F&& f) const {
    Out out;
    for (const auto& [k, v] : terms_) out.add_scaled(f(k), v);
    return out;
  }

  // Linear extension of f: Key -> HalfLaurent.
  template <class F>
  HalfLaurent evaluate(F&& f) const {
    HalfLaurent acc;
    for (const auto& [k, v] : terms_) acc += v * f(k);
    return acc;
  }

 private:
  Map terms_;
};

}  // namespace skeinlab
