#pragma once
// Hopf and (half-)coribbon structure of the stated skein algebra of the bigon.

#include "skeinlab/diagram.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace skeinlab {

// Thread-safe memo table; values are computed outside the lock.
template <class K, class V>
class Memo {
 public:
  template <class F>
  V get_or_compute(const K& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<K, V> map_;
};

using TensorKey = std::vector<BasisTangle>;
using TensorElement = LinComb<TensorKey>;

inline std::string to_string(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    std::string body;
    for (size_t i = 0; i < k.size(); ++i) body += (i ? " (x) " : "") + k[i].to_string();
    std::string term;
    if (c.is_one()) {
      term = body;
    } else if (c == HalfLaurent(-1)) {
      term = "-" + body;
    } else {
      term = c.to_factor_string() + " * " + body;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

inline TensorElement tensor(const SkeinElement& x, const SkeinElement& y) {
  TensorElement out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out.add({kx, ky}, cx * cy);
  return out;
}

inline TensorElement as_tensor1(const SkeinElement& x) {
  TensorElement out;
  for (const auto& [k, c] : x.terms()) out.add({k}, c);
  return out;
}

// Applies a linear map Basis -> SkeinElement to tensor slot `pos`.
template <class F>
TensorElement apply_at(const TensorElement& t, size_t pos, F&& f) {
  TensorElement out;
  for (const auto& [key, c] : t.terms()) {
    SkeinElement img = f(key[pos]);
    for (const auto& [k2, c2] : img.terms()) {
      TensorKey nk = key;
      nk[pos] = k2;
      out.add(nk, c * c2);
    }
  }
  return out;
}

// Applies a linear map Basis -> TensorElement (of any arity) to slot `pos`, splicing the result in.
template <class F>
TensorElement expand_at(const TensorElement& t, size_t pos, F&& f) {
  TensorElement out;
  for (const auto& [key, c] : t.terms()) {
    TensorElement img = f(key[pos]);
    for (const auto& [k2, c2] : img.terms()) {
      TensorKey nk(key.begin(), key.begin() + pos);
      nk.insert(nk.end(), k2.begin(), k2.end());
      nk.insert(nk.end(), key.begin() + pos + 1, key.end());
      out.add(nk, c * c2);
    }
  }
  return out;
}

// Contracts slot `pos` with a functional.
template <class F>
TensorElement contract_at(const TensorElement& t, size_t pos, F&& f) {
  TensorElement out;
  for (const auto& [key, c] : t.terms()) {
    HalfLaurent v = f(key[pos]);
    if (v.is_zero()) continue;
    TensorKey nk = key;
    nk.erase(nk.begin() + pos);
    out.add(nk, c * v);
  }
  return out;
}

// Multiplies slots pos and pos+1 together.
TensorElement multiply_slots(const TensorElement& t, size_t pos);

inline SkeinElement from_tensor1(const TensorElement& t) {
  SkeinElement out;
  for (const auto& [k, c] : t.terms()) out.add(k.at(0), c);
  return out;
}

class BigonSkein {
 public:
  static BigonSkein& instance() {
    static BigonSkein b;
    return b;
  }

  // Vertical superposition: x above y.
  SkeinElement mul_basis(const BasisTangle& x, const BasisTangle& y) {
    return evaluate_parallel(x.mu + y.mu, x.nu + y.nu);
  }
  SkeinElement mul(const SkeinElement& x, const SkeinElement& y) {
    SkeinElement out;
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) out.add_scaled(mul_basis(kx, ky), cx * cy);
    return out;
  }

  TensorElement comul_basis(const BasisTangle& x) {
    return comul_memo_.get_or_compute(x, [&] {
      TensorElement out;
      for (const auto& eta : all_states(x.n())) {
        SkeinElement left = evaluate_parallel(x.mu, eta);
        if (left.is_zero()) continue;
        SkeinElement right = evaluate_parallel(eta, x.nu);
        out += tensor(left, right);
      }
      return out;
    });
  }
  TensorElement comul(const SkeinElement& x) {
    TensorElement out;
    for (const auto& [k, c] : x.terms()) out.add_scaled(comul_basis(k), c);
    return out;
  }

  static HalfLaurent counit_basis(const BasisTangle& x) { return HalfLaurent(x.mu == x.nu ? 1 : 0); }
  HalfLaurent counit(const SkeinElement& x) { return x.evaluate(counit_basis); }

  // beta(mu;nu) -> prod C(nu_i) / prod C(mu_i) * beta(-rev nu; -rev mu).
  static SkeinElement antipode_basis(const BasisTangle& x) {
    HalfLaurent coef(1);
    for (char c : x.nu) coef *= BoundaryCoefficients::Cfun(c);
    for (char c : x.mu) coef *= BoundaryCoefficients::Cfun(c).inverse();
    return coef * SkeinElement(BasisTangle(neg_rev(x.nu), neg_rev(x.mu)));
  }
  SkeinElement antipode(const SkeinElement& x) { return x.map_linear<SkeinElement>(antipode_basis); }

  static SkeinElement antipode_inverse_basis(const BasisTangle& x) {
    BasisTangle pre(neg_rev(x.nu), neg_rev(x.mu));
    SkeinElement img = antipode_basis(pre);
    return img.terms().begin()->second.inverse() * SkeinElement(pre);
  }
  SkeinElement antipode_inverse(const SkeinElement& x) { return x.map_linear<SkeinElement>(antipode_inverse_basis); }

  static SkeinElement rot_basis(const BasisTangle& x) { return SkeinElement(BasisTangle(x.nu, x.mu)); }
  SkeinElement rot(const SkeinElement& x) { return x.map_linear<SkeinElement>(rot_basis); }

  // Half-twist braid on n rows: each pair crosses once, the upper strand passing under.
  static std::vector<Slice> half_twist_under(int n) {
    std::vector<Slice> out;
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n - i; ++j) out.push_back(CrossUnder(j));
    return out;
  }
  static std::vector<Slice> half_twist_under_inverse(int n) {
    std::vector<Slice> fwd = half_twist_under(n), out;
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) out.push_back(Cross(it->index));
    return out;
  }

  // Inversion along the east edge.
  SkeinElement inv_east_basis(const BasisTangle& x, bool inverse) {
    auto& memo = inverse ? inv_east_inverse_memo_ : inv_east_memo_;
    return memo.get_or_compute(x, [&] {
      int n = static_cast<int>(x.n());
      std::string east = neg_rev(x.nu);
      HalfLaurent coef(1);
      if (!inverse) {
        for (char c : x.nu) coef *= BoundaryCoefficients::Cfun(c);
        return coef * reduce(StatedWord(SliceWord(n, half_twist_under(n)), x.mu, east));
      }
      for (char c : east) coef *= BoundaryCoefficients::Cfun(c).inverse();
      return coef * reduce(StatedWord(SliceWord(n, half_twist_under_inverse(n)), x.mu, east));
    });
  }

  enum class Edge { West, East };

  SkeinElement inv_edge(const SkeinElement& x, Edge edge, bool inverse) {
    if (edge == Edge::East)
      return x.map_linear<SkeinElement>([&](const BasisTangle& k) { return inv_east_basis(k, inverse); });
    return rot(inv_edge(rot(x), Edge::East, inverse));
  }

  HalfLaurent t_basis(const BasisTangle& x) {
    return t_memo_.get_or_compute(x, [&] { return counit(inv_east_basis(x, true)); });
  }
  HalfLaurent t_inv_basis(const BasisTangle& x) {
    return t_inv_memo_.get_or_compute(x, [&] { return counit(inv_east_basis(x, false)); });
  }
  HalfLaurent t_form(const SkeinElement& x) {
    return x.evaluate([&](const BasisTangle& k) { return t_basis(k); });
  }
  HalfLaurent t_inv_form(const SkeinElement& x) {
    return x.evaluate([&](const BasisTangle& k) { return t_inv_basis(k); });
  }

  // Convolution f * g evaluated on a basis element.
  template <class F, class G>
  HalfLaurent convolve(const BasisTangle& x, F&& f, G&& g) {
    HalfLaurent acc;
    TensorElement dx = comul_basis(x);
    for (const auto& [k, c] : dx.terms()) {
      HalfLaurent fv = f(k[0]);
      if (fv.is_zero()) continue;
      acc += c * fv * g(k[1]);
    }
    return acc;
  }

  HalfLaurent theta_basis(const BasisTangle& x) {
    return theta_memo_.get_or_compute(x, [&] {
      return convolve(x, [&](const BasisTangle& k) { return t_basis(k); },
                      [&](const BasisTangle& k) { return t_basis(k); });
    });
  }
  HalfLaurent theta_form(const SkeinElement& x) {
    return x.evaluate([&](const BasisTangle& k) { return theta_basis(k); });
  }

  // (Id (x) t) o comul.
  SkeinElement ht_coaction(const SkeinElement& x) {
    SkeinElement out;
    TensorElement dx = comul(x);
    for (const auto& [k, c] : dx.terms()) out.add(k[0], c * t_basis(k[1]));
    return out;
  }

  // Co-R-matrix on generators, indexed by the (west, east) states of each strand.
  static HalfLaurent r_generator(char i, char j, char k, char l) {
    std::string g1{i, j}, g2{k, l};
    if (g1 == "++" && g2 == "++") return q_pow(1);
    if (g1 == "++" && g2 == "--") return q_pow(-1);
    if (g1 == "--" && g2 == "++") return q_pow(-1);
    if (g1 == "+-" && g2 == "-+") return q_pow(1) - q_pow(-3);
    if (g1 == "--" && g2 == "--") return q_pow(1);
    return {};
  }

  // R(xy (x) z) = R(x (x) z1) R(y (x) z2) and R(x (x) yz) = R(x1 (x) z) R(x2 (x) y).
  HalfLaurent r_basis(const BasisTangle& x, const BasisTangle& y) {
    return r_memo_.get_or_compute({x, y}, [&]() -> HalfLaurent {
      if (x.n() == 0) return counit_basis(y);
      if (y.n() == 0) return counit_basis(x);
      if (x.n() == 1 && y.n() == 1) return r_generator(x.mu[0], x.nu[0], y.mu[0], y.nu[0]);
      HalfLaurent acc;
      if (x.n() > 1) {
        BasisTangle g(x.mu.substr(0, 1), x.nu.substr(0, 1));
        BasisTangle rest(x.mu.substr(1), x.nu.substr(1));
        TensorElement dy = comul_basis(y);
        for (const auto& [k, c] : dy.terms()) {
          HalfLaurent r1 = r_basis(g, k[0]);
          if (r1.is_zero()) continue;
          acc += c * r1 * r_basis(rest, k[1]);
        }
        return acc;
      }
      BasisTangle h(y.mu.substr(0, 1), y.nu.substr(0, 1));
      BasisTangle rest(y.mu.substr(1), y.nu.substr(1));
      for (char s : std::string("+-")) {
        BasisTangle g1(x.mu, std::string(1, s)), g2(std::string(1, s), x.nu);
        HalfLaurent r1 = r_basis(g1, rest);
        if (r1.is_zero()) continue;
        acc += r1 * r_basis(g2, h);
      }
      return acc;
    });
  }
  HalfLaurent r_form(const SkeinElement& x, const SkeinElement& y) {
    HalfLaurent acc;
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) acc += cx * cy * r_basis(kx, ky);
    return acc;
  }

  // m o c with c = fl o R_24 o (Delta (x) Delta): y1 x1 R(x2 (x) y2).
  SkeinElement braided_opposite_mul(const SkeinElement& x, const SkeinElement& y) {
    SkeinElement out;
    TensorElement dx = comul(x), dy = comul(y);
    for (const auto& [kx, cx] : dx.terms())
      for (const auto& [ky, cy] : dy.terms()) {
        HalfLaurent r = r_basis(kx[1], ky[1]);
        if (r.is_zero()) continue;
        out.add_scaled(mul_basis(ky[0], kx[0]), cx * cy * r);
      }
    return out;
  }

  void clear_memos() {
    comul_memo_.clear();
    inv_east_memo_.clear();
    inv_east_inverse_memo_.clear();
    t_memo_.clear();
    t_inv_memo_.clear();
    theta_memo_.clear();
    r_memo_.clear();
  }

 private:
  Memo<BasisTangle, TensorElement> comul_memo_;
  Memo<BasisTangle, SkeinElement> inv_east_memo_, inv_east_inverse_memo_;
  Memo<BasisTangle, HalfLaurent> t_memo_, t_inv_memo_, theta_memo_;
  Memo<std::pair<BasisTangle, BasisTangle>, HalfLaurent> r_memo_;
};

inline TensorElement multiply_slots(const TensorElement& t, size_t pos) {
  TensorElement out;
  auto& B = BigonSkein::instance();
  for (const auto& [key, c] : t.terms()) {
    SkeinElement prod = B.mul_basis(key[pos], key[pos + 1]);
    for (const auto& [k2, c2] : prod.terms()) {
      TensorKey nk(key.begin(), key.begin() + pos);
      nk.push_back(k2);
      nk.insert(nk.end(), key.begin() + pos + 2, key.end());
      out.add(nk, c * c2);
    }
  }
  return out;
}

// Free-function facade.
inline SkeinElement mul(const SkeinElement& x, const SkeinElement& y) { return BigonSkein::instance().mul(x, y); }
inline TensorElement comul(const SkeinElement& x) { return BigonSkein::instance().comul(x); }
inline HalfLaurent counit(const SkeinElement& x) { return BigonSkein::instance().counit(x); }
inline SkeinElement antipode(const SkeinElement& x) { return BigonSkein::instance().antipode(x); }
inline SkeinElement antipode_inverse(const SkeinElement& x) { return BigonSkein::instance().antipode_inverse(x); }
inline SkeinElement rot_star(const SkeinElement& x) { return BigonSkein::instance().rot(x); }
inline SkeinElement inv_edge(const SkeinElement& x, BigonSkein::Edge e, bool inverse) {
  return BigonSkein::instance().inv_edge(x, e, inverse);
}
inline HalfLaurent t_form(const SkeinElement& x) { return BigonSkein::instance().t_form(x); }
inline HalfLaurent t_inv_form(const SkeinElement& x) { return BigonSkein::instance().t_inv_form(x); }
inline HalfLaurent theta_form(const SkeinElement& x) { return BigonSkein::instance().theta_form(x); }
inline HalfLaurent r_form(const SkeinElement& x, const SkeinElement& y) { return BigonSkein::instance().r_form(x, y); }
inline SkeinElement ht_coaction(const SkeinElement& x) { return BigonSkein::instance().ht_coaction(x); }
inline SkeinElement braided_opposite_mul(const SkeinElement& x, const SkeinElement& y) {
  return BigonSkein::instance().braided_opposite_mul(x, y);
}

// Element expressions: beta(SIGNS;SIGNS), a, b, c, d, 1, scalars, + - * ^.
struct SkeinTraits {
  using T = SkeinElement;
  static T from_scalar(const HalfLaurent& x) { return x * unit_element(); }
  static T mul(const T& a, const T& b) { return skeinlab::mul(a, b); }
  static T pow(const T& a, long e) {
    if (e < 0) {
      if (a.size() == 1 && a.terms().begin()->first.n() == 0)
        return from_scalar(a.terms().begin()->second.pow(e));
      throw std::domain_error("negative power of a non-scalar element");
    }
    T r = unit_element();
    for (long i = 0; i < e; ++i) r = skeinlab::mul(r, a);
    return r;
  }
  static T atom(const std::string& name, Cursor& c) {
    if (name == "a") return gen_a();
    if (name == "b") return gen_b();
    if (name == "c") return gen_c();
    if (name == "d") return gen_d();
    if (name == "beta") {
      c.expect('(');
      std::string mu, nu;
      c.skip_ws();
      while (is_sign(c.peek_raw())) mu.push_back(c.get_raw());
      c.expect(';');
      c.skip_ws();
      while (is_sign(c.peek_raw())) nu.push_back(c.get_raw());
      c.expect(')');
      if (mu.size() != nu.size()) c.fail("beta needs state vectors of equal length");
      return evaluate_parallel(mu, nu);
    }
    c.fail("unknown element symbol '" + name + "'");
  }
};

inline SkeinElement parse_skein(std::string_view text) {
  Cursor c(text);
  ExprParser<SkeinTraits> p(c);
  return p.parse_all();
}

}  // namespace skeinlab
