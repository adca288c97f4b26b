#pragma once
// Degreewise checks of the splitting and excision statements for two bigons glued into one.

#include "skeinlab/internal_skein.hpp"

#include <random>

namespace skeinlab {

// Exact: (Delta (x) Id) Delta = (Id (x) Delta) Delta on every n-strand basis element.
inline CheckResult check_comul_coassociative(int n) {
  CheckResult r;
  for (const auto& x : basis_of_degree(n)) {
    TensorElement d = comul(SkeinElement(x));
    TensorElement left = expand_at(d, 0, [](const BasisTangle& k) { return comul(SkeinElement(k)); });
    TensorElement right = expand_at(d, 1, [](const BasisTangle& k) { return comul(SkeinElement(k)); });
    if (!(left == right)) {
      r.ok = false;
      r.witness = x.to_string();
      return r;
    }
  }
  return r;
}

// Exact: Delta(w) is fixed by the merged coaction x_(1) (x) y_(2) (x) S^-1(y_(1)) x_(2).
inline CheckResult check_comul_invariant(int n) {
  CheckResult r;
  auto& B = BigonSkein::instance();
  for (const auto& w : basis_of_degree(n)) {
    TensorElement d2 = comul(SkeinElement(w));
    TensorElement d4 = expand_at(expand_at(d2, 1, [&](const BasisTangle& k) { return B.comul_basis(k); }), 0,
                                 [&](const BasisTangle& k) { return B.comul_basis(k); });
    // d4 = x1 (x) x2 (x) y1 (x) y2
    TensorElement merged;
    for (const auto& [k, c] : d4.terms()) {
      SkeinElement h = mul(antipode_inverse(SkeinElement(k[2])), SkeinElement(k[1]));
      for (const auto& [kh, ch] : h.terms()) merged.add({k[0], k[3], kh}, c * ch);
    }
    TensorElement expected;
    for (const auto& [k, c] : d2.terms()) expected.add({k[0], k[1], BasisTangle()}, c);
    if (!(merged == expected)) {
      r.ok = false;
      r.witness = w.to_string();
      return r;
    }
  }
  return r;
}

// Linear algebra at one specialization for the degree-n component.
class ExcisionDegree {
 public:
  ExcisionDegree(int n, const Rational& s0) : n_(n), s0_(s0) {
    validate_specialization(s0);
    basis_ = basis_of_degree(n);
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    Comodule vn = quantum_plane_Vn(n);
    for (size_t i = 0; i < vn.dim; ++i)
      for (size_t j = 0; j < vn.dim; ++j) lifts_.push_back(to_skein(vn(i, j)));
    top_ = RMatrix(lifts_.size(), basis_.size());
    for (size_t c = 0; c < lifts_.size(); ++c)
      for (const auto& [k, v] : lifts_[c].terms())
        if (static_cast<int>(k.n()) == n) top_(c, index_.at(k)) = v.specialize(s0);
  }

  int degree() const { return n_; }
  size_t dim() const { return basis_.size(); }
  size_t side() const { return static_cast<size_t>(n_ + 1); }
  const RMatrix& top_part() const { return top_; }
  // Coaction entry C_ij of V_n as a skein element.
  const SkeinElement& lift(size_t i, size_t j) const { return lifts_[i * side() + j]; }

  // Rows: basis elements; columns: pairs (b1, b2) of basis elements.
  RMatrix graded_comul_matrix() const {
    size_t d = dim();
    RMatrix m(d, d * d);
    for (size_t r = 0; r < d; ++r) {
      TensorElement t = comul(SkeinElement(basis_[r]));
      for (const auto& [k, c] : t.terms()) {
        if (static_cast<int>(k[0].n()) != n_ || static_cast<int>(k[1].n()) != n_) continue;
        m(r, index_.at(k[0]) * d + index_.at(k[1])) = c.specialize(s0_);
      }
    }
    return m;
  }

  // Kernel dimension of (Delta_gr (x) Id - Id (x) Delta_gr) on S_n (x) S_n.
  size_t cotensor_kernel_dim() const {
    size_t d = dim();
    RMatrix g = graded_comul_matrix();
    RMatrix m(d * d * d, d * d);
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b) {
        size_t col = a * d + b;
        for (size_t p = 0; p < d * d; ++p) {
          size_t a1 = p / d, a2 = p % d;
          if (g(a, p) != 0) m((a1 * d + a2) * d + b, col) += g(a, p);
          if (g(b, p) != 0) m((a * d + a1) * d + a2, col) -= g(b, p);
        }
      }
    return kernel(m).size();
  }

  enum class Variant { Inv, HH0L, HH0lHt };

  // Kernel of the variant's defining condition, in (basis (x) basis) coordinates; one row per vector.
  RMatrix invariants_subspace(Variant v) const {
    ConditionBuilder cb(lifts_.size() * lifts_.size());
    size_t N = side();
    auto cidx = [N](size_t i, size_t j) { return i * N + j; };
    if (v == Variant::Inv) {
      for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
          for (size_t k = 0; k < N; ++k)
            for (size_t l = 0; l < N; ++l) {
              size_t col = cidx(i, j) * lifts_.size() + cidx(k, l);
              for (size_t p = 0; p < N; ++p)
                for (size_t r = 0; r < N; ++r)
                  cb.add(col, cidx(i, p), cidx(r, l), product_sinv(cidx(k, r), cidx(p, j)), Rational(1));
              cb.add(col, cidx(i, j), cidx(k, l), unit_element(), Rational(-1));
            }
    } else if (v == Variant::HH0L) {
      for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
          for (size_t k = 0; k < N; ++k)
            for (size_t l = 0; l < N; ++l) {
              size_t col = cidx(i, j) * lifts_.size() + cidx(k, l);
              for (size_t p = 0; p < N; ++p) cb.add(col, cidx(i, p), cidx(k, l), lift(p, j), Rational(1));
              for (size_t r = 0; r < N; ++r)
                cb.add(col, cidx(i, j), cidx(r, l), antipode(antipode_inverse(lift(k, r))), Rational(-1));
            }
    } else {
      auto delta = twisted_left_coaction();
      for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
          for (size_t kl = 0; kl < lifts_.size(); ++kl) {
            size_t col = cidx(i, j) * lifts_.size() + kl;
            for (size_t p = 0; p < N; ++p) cb.add(col, cidx(i, p), kl, lift(p, j), Rational(1));
            for (const auto& [y2, h, c] : delta[kl]) cb.add(col, cidx(i, j), y2, h, -c);
          }
    }
    RMatrix cond = cb.build(s0_);
    auto ker = kernel(cond);
    // Lift coordinates to basis coordinates through the top-part map.
    size_t L = lifts_.size(), d = dim();
    RMatrix out(ker.size(), d * d);
    for (size_t r = 0; r < ker.size(); ++r)
      for (size_t c1 = 0; c1 < L; ++c1)
        for (size_t c2 = 0; c2 < L; ++c2) {
          const Rational& v0 = ker[r][c1 * L + c2];
          if (v0 == 0) continue;
          for (size_t b1 = 0; b1 < d; ++b1) {
            if (top_(c1, b1) == 0) continue;
            for (size_t b2 = 0; b2 < d; ++b2)
              if (top_(c2, b2) != 0) out(r, b1 * d + b2) += v0 * top_(c1, b1) * top_(c2, b2);
          }
        }
    return out;
  }

 private:
  int n_;
  Rational s0_;
  std::vector<BasisTangle> basis_;
  std::map<BasisTangle, size_t> index_;
  std::vector<SkeinElement> lifts_;
  RMatrix top_;

  // S^-1(C_a) C_b.
  SkeinElement product_sinv(size_t a, size_t b) const { return mul(antipode_inverse(lifts_[a]), lifts_[b]); }

  // Sparse condition matrix: columns are domain pairs, rows are (lift, lift, skein basis) triples.
  class ConditionBuilder {
   public:
    explicit ConditionBuilder(size_t domain) : domain_(domain) {}
    void add(size_t col, size_t c1, size_t c2, const SkeinElement& h, const Rational& scale) {
      for (const auto& [k, v] : h.terms()) entries_.push_back({col, std::make_tuple(c1, c2, k), v, scale});
    }
    RMatrix build(const Rational& s0) const {
      std::map<std::tuple<size_t, size_t, BasisTangle>, size_t> rows;
      for (const auto& e : entries_) rows.emplace(e.key, 0);
      size_t i = 0;
      for (auto& [k, v] : rows) v = i++;
      RMatrix m(rows.size(), domain_);
      for (const auto& e : entries_) m(rows.at(e.key), e.col) += e.scale * e.coef.specialize(s0);
      return m;
    }

   private:
    struct Entry {
      size_t col;
      std::tuple<size_t, size_t, BasisTangle> key;
      HalfLaurent coef;
      Rational scale;
    };
    size_t domain_;
    std::vector<Entry> entries_;
  };

  // ht_A(C_kl) = sum_r C_rl t(S^-1(C_kr)) as a matrix on lift coordinates.
  RMatrix ht_matrix_on_lifts() const {
    size_t N = side(), L = lifts_.size();
    RMatrix h(L, L);
    for (size_t k = 0; k < N; ++k)
      for (size_t r = 0; r < N; ++r) {
        Rational t = t_form(antipode_inverse(lift(k, r))).specialize(s0_);
        for (size_t l = 0; l < N; ++l) h(r * N + l, k * N + l) = t;
      }
    return h;
  }

  // delta'(C_kl) = (Id (x) ht_A) Delta^l ht_A^-1 (C_kl) as triples (lift index of y', h, coefficient),
  // with Delta^l(C_ab) = sum_r rot(S^-1(C_ar)) (x) C_rb.
  std::vector<std::vector<std::tuple<size_t, SkeinElement, Rational>>> twisted_left_coaction() const {
    size_t N = side(), L = lifts_.size();
    RMatrix h = ht_matrix_on_lifts();
    RMatrix hinv = inverse(h);
    std::vector<std::vector<std::tuple<size_t, SkeinElement, Rational>>> out(L);
    for (size_t kl = 0; kl < L; ++kl)
      for (size_t ab = 0; ab < L; ++ab) {
        Rational z = hinv(ab, kl);
        if (z == 0) continue;
        size_t a = ab / N, b = ab % N;
        for (size_t r = 0; r < N; ++r) {
          SkeinElement left = rot_star(antipode_inverse(lift(a, r)));
          for (size_t y = 0; y < L; ++y) {
            Rational hv = h(y, r * N + b);
            if (hv != 0) out[kl].emplace_back(y, left, z * hv);
          }
        }
      }
    return out;
  }
};

inline std::string to_string(ExcisionDegree::Variant v) {
  switch (v) {
    case ExcisionDegree::Variant::Inv:
      return "inv";
    case ExcisionDegree::Variant::HH0L:
      return "hh0_L";
    case ExcisionDegree::Variant::HH0lHt:
      return "hh0_l_ht";
  }
  return "?";
}

// Solves Delta_gr(x) = v for a random v in the inv subspace and checks the residual.
inline CheckResult check_pullback(const ExcisionDegree& e, uint64_t seed) {
  RMatrix inv = e.invariants_subspace(ExcisionDegree::Variant::Inv);
  RMatrix g = e.graded_comul_matrix();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<Rational> v(g.cols);
  for (size_t r = 0; r < inv.rows; ++r) {
    Rational c = dist(rng);
    for (size_t j = 0; j < inv.cols; ++j) v[j] += c * inv(r, j);
  }
  CheckResult res;
  auto x = solve(transpose(g), v);
  if (!x) {
    res.ok = false;
    res.witness = "inv vector outside the comultiplication image at degree " + std::to_string(e.degree());
    return res;
  }
  for (size_t j = 0; j < g.cols; ++j) {
    Rational acc = 0;
    for (size_t i = 0; i < g.rows; ++i) acc += (*x)[i] * g(i, j);
    if (acc != v[j]) {
      res.ok = false;
      res.witness = "nonzero residual at degree " + std::to_string(e.degree());
      return res;
    }
  }
  return res;
}

}  // namespace skeinlab
