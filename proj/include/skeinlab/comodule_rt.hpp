#pragma once
// Right O_{q^2}(SL_2)-comodules and the Reshetikhin-Turaev evaluation of slice words.

#include "skeinlab/quantum_sl2.hpp"

namespace skeinlab {

// Delta(e_j) = sum_i e_i (x) coaction[i][j].
struct Comodule {
  size_t dim = 0;
  std::vector<std::vector<HopfElement>> coaction;

  Comodule() = default;
  explicit Comodule(std::vector<std::vector<HopfElement>> c) : dim(c.size()), coaction(std::move(c)) {
    for (const auto& row : coaction)
      if (row.size() != dim) throw std::invalid_argument("comodule coaction must be square");
  }
  const HopfElement& operator()(size_t i, size_t j) const { return coaction[i][j]; }
};

inline Comodule standard_V() {
  return Comodule({{hopf_generator('a'), hopf_generator('b')}, {hopf_generator('c'), hopf_generator('d')}});
}

inline Comodule trivial_comodule() { return Comodule({{hopf_one()}}); }

inline Comodule tensor(const Comodule& w1, const Comodule& w2) {
  size_t n = w1.dim * w2.dim;
  std::vector<std::vector<HopfElement>> c(n, std::vector<HopfElement>(n));
  for (size_t i1 = 0; i1 < w1.dim; ++i1)
    for (size_t i2 = 0; i2 < w2.dim; ++i2)
      for (size_t j1 = 0; j1 < w1.dim; ++j1)
        for (size_t j2 = 0; j2 < w2.dim; ++j2)
          c[i1 * w2.dim + i2][j1 * w2.dim + j2] = hopf_mul(w1(i1, j1), w2(i2, j2));
  return Comodule(std::move(c));
}

inline Comodule tensor_power(const Comodule& w, int k) {
  Comodule out = trivial_comodule();
  for (int i = 0; i < k; ++i) out = tensor(out, w);
  return out;
}

// Homogeneous degree-n part of the quantum plane (yx = q^2 xy), basis x^{n-i} y^i.
inline Comodule quantum_plane_Vn(int n) {
  if (n < 0) throw std::invalid_argument("quantum_plane_Vn: negative degree");
  // Element of plane (x) O: map (power of y, PBW monomial) -> coefficient; x-power is implied by degree.
  using PlaneTensor = LinComb<std::pair<int, PBWMonomial>>;
  auto times = [](const PlaneTensor& u, const PlaneTensor& v, int deg_u) {
    PlaneTensor out;
    for (const auto& [ku, cu] : u.terms())
      for (const auto& [kv, cv] : v.terms()) {
        // (x^{deg_u - r} y^r)(x^{p'} y^{r'}) = q^{2 r p'} x^{...} y^{r + r'}; here v has degree 1.
        int p_prime = 1 - kv.first;
        HalfLaurent f = q_pow(2L * ku.first * p_prime);
        HopfElement prod = hopf_mul(HopfElement(ku.second), HopfElement(kv.second));
        for (const auto& [m, c] : prod.terms()) out.add({ku.first + kv.first, m}, cu * cv * c * f);
      }
    (void)deg_u;
    return out;
  };
  PlaneTensor dx, dy;
  dx.add({0, PBWMonomial::abc(1, 0, 0)}, HalfLaurent(1));
  dx.add({1, PBWMonomial::abc(0, 0, 1)}, HalfLaurent(1));
  dy.add({0, PBWMonomial::abc(0, 1, 0)}, HalfLaurent(1));
  dy.add({1, PBWMonomial::dbc(1, 0, 0)}, HalfLaurent(1));
  std::vector<std::vector<HopfElement>> c(n + 1, std::vector<HopfElement>(n + 1));
  for (int j = 0; j <= n; ++j) {
    PlaneTensor acc;
    acc.add({0, PBWMonomial()}, HalfLaurent(1));
    for (int t = 0; t < n; ++t) acc = times(acc, t < n - j ? dx : dy, t);
    for (const auto& [k, v] : acc.terms()) c[k.first][j].add(k.second, v);
  }
  return Comodule(std::move(c));
}

// Entrywise Delta(C_ij) = sum_k C_ik (x) C_kj.
inline bool check_coassociative(const Comodule& w) {
  for (size_t i = 0; i < w.dim; ++i)
    for (size_t j = 0; j < w.dim; ++j) {
      HopfTensor rhs;
      for (size_t k = 0; k < w.dim; ++k) rhs += hopf_tensor(w(i, k), w(k, j));
      if (!(hopf_comul(w(i, j)) == rhs)) return false;
    }
  return true;
}

inline bool check_counital(const Comodule& w) {
  for (size_t i = 0; i < w.dim; ++i)
    for (size_t j = 0; j < w.dim; ++j)
      if (hopf_counit(w(i, j)) != HalfLaurent(i == j ? 1 : 0)) return false;
  return true;
}

// Matrices on V^{(x)k} with basis ordered by state strings ('+' before '-'), first factor most significant.
inline Matrix rt_cap() {
  Matrix m(1, 4);
  m(0, 1) = -s_pow(5);
  m(0, 2) = s_pow(1);
  return m;
}
inline Matrix rt_cup() {
  Matrix m(4, 1);
  m(1, 0) = s_pow(-1);
  m(2, 0) = -s_pow(-5);
  return m;
}
inline Matrix rt_crossing(bool over) {
  HalfLaurent a = q_pow(over ? 1 : -1), b = q_pow(over ? -1 : 1);
  return a * Matrix::identity(4) + b * (rt_cup() * rt_cap());
}

inline Matrix identity_power(int k) { return Matrix::identity(size_t(1) << k); }

// Matrix from V^{(x)west} to V^{(x)east}: rows are east states, columns west states.
inline Matrix rt_evaluate(const SliceWord& w) {
  int rows = w.west_arity;
  Matrix m = identity_power(rows);
  for (const Slice& s : w.slices) {
    Matrix local;
    int width = 2;
    switch (s.kind) {
      case Slice::Kind::Over:
        local = rt_crossing(true);
        break;
      case Slice::Kind::Under:
        local = rt_crossing(false);
        break;
      case Slice::Kind::Cap:
        local = rt_cap();
        break;
      case Slice::Kind::Cup:
        local = rt_cup();
        width = 0;
        break;
    }
    int after = rows - s.index - width;
    Matrix step = kron(kron(identity_power(s.index), local), identity_power(after));
    m = step * m;
    if (s.kind == Slice::Kind::Cap) rows -= 2;
    if (s.kind == Slice::Kind::Cup) rows += 2;
  }
  return m;
}

// ht(e_j) = sum_i e_i t(C_ij).
inline Matrix ht_matrix(const Comodule& w) {
  Matrix m(w.dim, w.dim);
  for (size_t i = 0; i < w.dim; ++i)
    for (size_t j = 0; j < w.dim; ++j) m(i, j) = t_form(to_skein(w(i, j)));
  return m;
}

// g . e_j = sum_i e_i <g, C_ij>.
inline Matrix u_action(const std::vector<UGenerator>& word, const Comodule& w) {
  Matrix m(w.dim, w.dim);
  for (size_t i = 0; i < w.dim; ++i)
    for (size_t j = 0; j < w.dim; ++j) m(i, j) = pairing(word, w(i, j));
  return m;
}
inline Matrix u_action(UGenerator g, const Comodule& w) { return u_action(std::vector<UGenerator>{g}, w); }

// c(v_j (x) w_l) = sum w_k (x) v_i R(C^V_ij (x) C^W_kl), the algebraic braiding followed by the flip.
inline Matrix algebraic_braiding(const Comodule& v, const Comodule& w) {
  size_t n = v.dim * w.dim;
  Matrix m(n, n);
  for (size_t i = 0; i < v.dim; ++i)
    for (size_t j = 0; j < v.dim; ++j)
      for (size_t k = 0; k < w.dim; ++k)
        for (size_t l = 0; l < w.dim; ++l)
          m(k * v.dim + i, j * w.dim + l) = r_form(to_skein(v(i, j)), to_skein(w(k, l)));
  return m;
}

// Swap of tensor factors V (x) W -> W (x) V.
inline Matrix flip_matrix(size_t dv, size_t dw) {
  Matrix m(dv * dw, dv * dw);
  for (size_t i = 0; i < dv; ++i)
    for (size_t k = 0; k < dw; ++k) m(k * dv + i, i * dw + k) = HalfLaurent(1);
  return m;
}

// Multiplicity of V_k in V^{(x)n}.
inline long multiplicity(int k, int n) {
  if (k < 0 || n < 0 || k > n || (n - k) % 2 != 0) return 0;
  std::vector<long> row(n + 2, 0);
  row[0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<long> next(n + 2, 0);
    for (int j = 0; j <= n; ++j) {
      if (row[j] == 0) continue;
      next[j + 1] += row[j];
      if (j > 0) next[j - 1] += row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace skeinlab
