#pragma once
// Temperley-Lieb Hom-spaces on the bigon and the St map into the stated skein algebra.

#include "skeinlab/comodule_rt.hpp"

namespace skeinlab {

inline long catalan(int n) {
  if (n < 0) return 0;
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace detail {
// Non-crossing perfect matchings of the circular points [lo, hi); calls emit for each completion.
inline void matchings_of_range(int lo, int hi, std::vector<int>& partner, const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    partner[lo] = k;
    partner[k] = lo;
    matchings_of_range(lo + 1, k, partner, [&] { matchings_of_range(k + 1, hi, partner, emit); });
  }
}
}  // namespace detail

inline std::vector<Matching> enumerate_matchings(int n_west, int n_east) {
  if (n_west < 0 || n_east < 0) throw std::invalid_argument("enumerate_matchings: negative point count");
  if ((n_west + n_east) % 2 != 0) throw std::invalid_argument("enumerate_matchings: odd number of boundary points");
  std::vector<Matching> out;
  std::vector<int> partner(n_west + n_east, -1);
  detail::matchings_of_range(0, n_west + n_east, partner, [&] {
    Matching m{n_west, n_east, partner};
    m.validate();
    out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// St(M) evaluated on every pair of west and east state vectors.
struct StTable {
  Matching matching;
  std::vector<std::string> west_states, east_states;
  std::vector<SkeinElement> entries;  // index: west * |east| + east

  const SkeinElement& at(size_t w, size_t e) const { return entries[w * east_states.size() + e]; }
};

inline StTable st_from_word(const SliceWord& word, const Matching& label) {
  StTable t;
  t.matching = label;
  t.west_states = all_states(word.west_arity);
  t.east_states = all_states(word.east_arity());
  for (const auto& w : t.west_states)
    for (const auto& e : t.east_states) t.entries.push_back(reduce(StatedWord(word, w, e)));
  return t;
}

inline StTable st_map(const Matching& m) { return st_from_word(matching_to_word(m), m); }

struct CheckResult {
  bool ok = true;
  std::string witness;
};

enum class EdgeSide { West, East };

struct Insertion {
  Slice::Kind kind;  // Cap or Cup
  EdgeSide side;
  int position;

  std::string to_string() const {
    return std::string(kind == Slice::Kind::Cap ? "cap" : "cup") + std::to_string(position) +
           (side == EdgeSide::West ? "@west" : "@east");
  }
};

// Insertions compatible with a matching's arities.
inline std::vector<Insertion> insertions_for(const Matching& m) {
  std::vector<Insertion> out;
  for (EdgeSide side : {EdgeSide::West, EdgeSide::East}) {
    int n = side == EdgeSide::West ? m.n_west : m.n_east;
    // West insertion g maps into V^{n}; cap g has n+2 inputs, cup g has n-2 inputs.
    // East insertion g starts from V^{n}; cap needs n >= 2, cup always fits.
    if (side == EdgeSide::West) {
      for (int p = 0; p <= n; ++p) out.push_back({Slice::Kind::Cap, side, p});
      for (int p = 0; p + 2 <= n; ++p) out.push_back({Slice::Kind::Cup, side, p});
    } else {
      for (int p = 0; p + 2 <= n; ++p) out.push_back({Slice::Kind::Cap, side, p});
      for (int p = 0; p <= n; ++p) out.push_back({Slice::Kind::Cup, side, p});
    }
  }
  return out;
}

// St(alpha o g) = St(alpha) o RT(g) for a cap or cup g on either edge.
inline CheckResult check_st_naturality(const Matching& m, const Insertion& ins) {
  SliceWord base = matching_to_word(m);
  StTable st = st_map(m);
  Slice g{ins.kind, ins.position};
  CheckResult r;
  if (ins.side == EdgeSide::West) {
    int g_west = ins.kind == Slice::Kind::Cap ? m.n_west + 2 : m.n_west - 2;
    SliceWord gw(g_west, {g});
    Matrix rt = rt_evaluate(gw);  // rows: states on base's west edge
    StTable lhs = st_from_word(compose(gw, base), m);
    for (size_t wi = 0; wi < lhs.west_states.size(); ++wi)
      for (size_t ei = 0; ei < lhs.east_states.size(); ++ei) {
        SkeinElement rhs;
        for (size_t k = 0; k < st.west_states.size(); ++k)
          if (!rt(k, wi).is_zero()) rhs.add_scaled(st.at(k, ei), rt(k, wi));
        if (!(lhs.at(wi, ei) == rhs)) {
          r.ok = false;
          r.witness = m.to_string() + " " + ins.to_string() + " west=" + lhs.west_states[wi] +
                      " east=" + lhs.east_states[ei] + ": " + to_string(lhs.at(wi, ei)) + " != " + to_string(rhs);
          return r;
        }
      }
    return r;
  }
  SliceWord gw(m.n_east, {g});
  Matrix rt = rt_evaluate(gw);  // columns: states on base's east edge
  StTable lhs = st_from_word(compose(base, gw), m);
  for (size_t wi = 0; wi < lhs.west_states.size(); ++wi)
    for (size_t ei = 0; ei < lhs.east_states.size(); ++ei) {
      SkeinElement rhs;
      for (size_t k = 0; k < st.east_states.size(); ++k)
        if (!rt(ei, k).is_zero()) rhs.add_scaled(st.at(wi, k), rt(ei, k));
      if (!(lhs.at(wi, ei) == rhs)) {
        r.ok = false;
        r.witness = m.to_string() + " " + ins.to_string() + " west=" + lhs.west_states[wi] +
                    " east=" + lhs.east_states[ei] + ": " + to_string(lhs.at(wi, ei)) + " != " + to_string(rhs);
        return r;
      }
    }
  return r;
}

// Left coaction of the west edge written as a right coaction: y -> y_(2) (x) rot(y_(1)).
inline TensorElement west_coaction(const SkeinElement& y) {
  TensorElement out;
  TensorElement dy = comul(y);
  for (const auto& [k, c] : dy.terms()) out += c * tensor(SkeinElement(k[1]), rot_star(SkeinElement(k[0])));
  return out;
}

// St(M) is a comodule map for the coactions of both edges.
inline CheckResult check_st_intertwiner(const Matching& m) {
  StTable st = st_map(m);
  Comodule vw = tensor_power(standard_V(), m.n_west), ve = tensor_power(standard_V(), m.n_east);
  CheckResult r;
  size_t nw = st.west_states.size(), ne = st.east_states.size();
  for (size_t wi = 0; wi < nw; ++wi)
    for (size_t ei = 0; ei < ne; ++ei) {
      TensorElement lhs_e = comul(st.at(wi, ei)), rhs_e;
      for (size_t k = 0; k < ne; ++k) rhs_e += tensor(st.at(wi, k), to_skein(ve(k, ei)));
      if (!(lhs_e == rhs_e)) {
        r.ok = false;
        r.witness = m.to_string() + " east coaction at west=" + st.west_states[wi] + " east=" + st.east_states[ei];
        return r;
      }
      TensorElement lhs_w = west_coaction(st.at(wi, ei)), rhs_w;
      for (size_t k = 0; k < nw; ++k) rhs_w += tensor(st.at(k, ei), to_skein(vw(k, wi)));
      if (!(lhs_w == rhs_w)) {
        r.ok = false;
        r.witness = m.to_string() + " west coaction at west=" + st.west_states[wi] + " east=" + st.east_states[ei];
        return r;
      }
    }
  return r;
}

struct StRank {
  long rank = 0, catalan = 0, peter_weyl = 0;
};

// Rank at s0 of the span of the St tables of all matchings.
inline StRank st_rank(int n_west, int n_east, const Rational& s0) {
  validate_specialization(s0);
  std::vector<Matching> ms = enumerate_matchings(n_west, n_east);
  std::vector<StTable> tables;
  std::map<std::tuple<size_t, size_t, BasisTangle>, size_t> column;
  for (const auto& m : ms) {
    tables.push_back(st_map(m));
    const StTable& t = tables.back();
    for (size_t wi = 0; wi < t.west_states.size(); ++wi)
      for (size_t ei = 0; ei < t.east_states.size(); ++ei)
        for (const auto& [k, c] : t.at(wi, ei).terms()) column.emplace(std::make_tuple(wi, ei, k), column.size());
  }
  RMatrix mat(ms.size(), column.size());
  for (size_t r = 0; r < tables.size(); ++r) {
    const StTable& t = tables[r];
    for (size_t wi = 0; wi < t.west_states.size(); ++wi)
      for (size_t ei = 0; ei < t.east_states.size(); ++ei)
        for (const auto& [k, c] : t.at(wi, ei).terms()) mat(r, column.at(std::make_tuple(wi, ei, k))) = c.specialize(s0);
  }
  StRank out;
  out.rank = static_cast<long>(rank(mat));
  out.catalan = catalan((n_west + n_east) / 2);
  for (int k = 0; k <= std::max(n_west, n_east); ++k) out.peter_weyl += multiplicity(k, n_west) * multiplicity(k, n_east);
  return out;
}

// St of the stacked diagram (m1 above m2) equals the product of St images.
inline CheckResult check_st_product(const Matching& m1, const Matching& m2) {
  StTable t1 = st_map(m1), t2 = st_map(m2);
  SliceWord both = stack(matching_to_word(m1), matching_to_word(m2));
  CheckResult r;
  for (size_t w1 = 0; w1 < t1.west_states.size(); ++w1)
    for (size_t e1 = 0; e1 < t1.east_states.size(); ++e1)
      for (size_t w2 = 0; w2 < t2.west_states.size(); ++w2)
        for (size_t e2 = 0; e2 < t2.east_states.size(); ++e2) {
          SkeinElement lhs = reduce(StatedWord(both, t1.west_states[w1] + t2.west_states[w2],
                                               t1.east_states[e1] + t2.east_states[e2]));
          SkeinElement rhs = mul(t1.at(w1, e1), t2.at(w2, e2));
          if (!(lhs == rhs)) {
            r.ok = false;
            r.witness = m1.to_string() + " * " + m2.to_string();
            return r;
          }
        }
  return r;
}

// Diagram for y crossing x: y's strands enter above x's on the west and leave below on the east,
// passing over x's strands.
inline StatedWord crossed_stacking(const BasisTangle& x, const BasisTangle& y) {
  int m = static_cast<int>(x.n()), n = static_cast<int>(y.n());
  std::vector<Slice> slices;
  for (int j = 0; j < m; ++j)
    for (int i = n + j - 1; i >= j; --i) slices.push_back(Cross(i));
  return StatedWord(SliceWord(m + n, slices), y.mu + x.mu, x.nu + y.nu);
}

inline CheckResult check_braided_opposite(const BasisTangle& x, const BasisTangle& y) {
  SkeinElement alg = braided_opposite_mul(SkeinElement(x), SkeinElement(y));
  SkeinElement geo = reduce(crossed_stacking(x, y));
  CheckResult r;
  if (!(alg == geo)) {
    r.ok = false;
    r.witness = x.to_string() + ", " + y.to_string() + ": " + to_string(alg) + " != " + to_string(geo);
  }
  return r;
}

}  // namespace skeinlab
