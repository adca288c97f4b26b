#pragma once
// Sliced stated tangle diagrams in the bigon and their reduction to the decreasing-state basis.

#include "skeinlab/lincomb.hpp"
#include "skeinlab/parse.hpp"
#include "skeinlab/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skeinlab {

// ---------------------------------------------------------------- states

// A state vector is a string over {'+','-'}, listed top to bottom.
inline bool is_sign(char c) { return c == '+' || c == '-'; }
inline char flip_sign(char c) { return c == '+' ? '-' : '+'; }
inline bool is_decreasing(const std::string& s) { return s.find("-+") == std::string::npos; }
inline std::string negate_states(std::string s) {
  for (char& c : s) c = flip_sign(c);
  return s;
}
inline std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}
inline std::string neg_rev(const std::string& s) { return reversed(negate_states(s)); }
inline void validate_states(const std::string& s) {
  for (char c : s)
    if (!is_sign(c)) throw std::invalid_argument("state vector must consist of '+' and '-': " + s);
}

// All sign vectors of length n, in lexicographic order with '+' first.
inline std::vector<std::string> all_states(size_t n) {
  std::vector<std::string> out;
  size_t count = size_t(1) << n;
  out.reserve(count);
  for (size_t m = 0; m < count; ++m) {
    std::string s(n, '+');
    for (size_t i = 0; i < n; ++i)
      if (m & (size_t(1) << (n - 1 - i))) s[i] = '-';
    out.push_back(s);
  }
  return out;
}

// Decreasing sign vectors of length n: "+...+-...-" with p pluses, p = n..0.
inline std::vector<std::string> decreasing_states(size_t n) {
  std::vector<std::string> out;
  for (size_t p = n + 1; p-- > 0;) out.push_back(std::string(p, '+') + std::string(n - p, '-'));
  return out;
}

// ---------------------------------------------------------------- boundary scalars

class BoundaryCoefficients {
 public:
  BoundaryCoefficients() {
    if (!C('+', '+').is_zero() || !C('-', '-').is_zero() || C('+', '-') != s_pow(-1) || C('-', '+') != -s_pow(-5) ||
        Cbar('+', '-') != -s_pow(5) || Cbar('-', '+') != s_pow(1) || !Cbar('+', '+').is_zero() ||
        !Cbar('-', '-').is_zero())
      throw std::logic_error("boundary coefficient table inconsistent");
  }

  // East returning arc with upper state mu and lower state nu.
  static HalfLaurent C(char mu, char nu) {
    if (mu == '+' && nu == '-') return s_pow(-1);
    if (mu == '-' && nu == '+') return -s_pow(-5);
    return {};
  }
  // West returning arc with upper state mu and lower state nu.
  static HalfLaurent Cbar(char mu, char nu) {
    if (mu == '+' && nu == '-') return -s_pow(5);
    if (mu == '-' && nu == '+') return s_pow(1);
    return {};
  }
  // C(nu) := C^{-nu}_{nu}.
  static HalfLaurent Cfun(char nu) { return C(flip_sign(nu), nu); }

  // East edge: (-,+) -> swap * (swapped) + arc * (turnback).
  static HalfLaurent east_swap() { return q_pow(2); }
  static HalfLaurent east_arc() { return s_pow(-1); }
  // West edge: (-,+) -> swap * (swapped) + arc * (turnback).
  static HalfLaurent west_swap() { return q_pow(2); }
  static HalfLaurent west_arc() { return -s_pow(5); }

  static std::string fingerprint() {
    std::string f = "skeinlab-conventions-v1;";
    for (char m : std::string("+-"))
      for (char n : std::string("+-"))
        f += std::string("C") + m + n + "=" + C(m, n).to_string() + ";Cbar" + m + n + "=" + Cbar(m, n).to_string() + ";";
    f += "east=" + east_swap().to_string() + "|" + east_arc().to_string() + ";";
    f += "west=" + west_swap().to_string() + "|" + west_arc().to_string() + ";";
    f += "cross=q,qinv;crossunder=qinv,q;loop=" + delta_loop().to_string();
    return f;
  }
};

// ---------------------------------------------------------------- basis and elements

struct BasisTangle {
  std::string mu;  // west states, top to bottom
  std::string nu;  // east states, top to bottom

  BasisTangle() = default;
  BasisTangle(std::string m, std::string n) : mu(std::move(m)), nu(std::move(n)) {
    if (mu.size() != nu.size()) throw std::invalid_argument("basis tangle needs equal state lengths");
    validate_states(mu);
    validate_states(nu);
    if (!is_decreasing(mu) || !is_decreasing(nu))
      throw std::invalid_argument("basis tangle states must be decreasing: " + mu + ";" + nu);
  }
  size_t n() const { return mu.size(); }

  std::string to_string() const { return mu.empty() ? "1" : "beta(" + mu + ";" + nu + ")"; }

  friend bool operator==(const BasisTangle& a, const BasisTangle& b) { return a.mu == b.mu && a.nu == b.nu; }
  friend bool operator!=(const BasisTangle& a, const BasisTangle& b) { return !(a == b); }
  friend bool operator<(const BasisTangle& a, const BasisTangle& b) {
    if (a.mu.size() != b.mu.size()) return a.mu.size() < b.mu.size();
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.nu < b.nu;
  }
};

// All (n+1)^2 basis tangles with n strands.
inline std::vector<BasisTangle> basis_of_degree(size_t n) {
  std::vector<BasisTangle> out;
  for (const auto& m : decreasing_states(n))
    for (const auto& v : decreasing_states(n)) out.emplace_back(m, v);
  return out;
}

// All basis tangles with at most n strands.
inline std::vector<BasisTangle> basis_up_to(size_t n) {
  std::vector<BasisTangle> out;
  for (size_t k = 0; k <= n; ++k) {
    auto b = basis_of_degree(k);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

using SkeinElement = LinComb<BasisTangle>;

inline SkeinElement unit_element() { return SkeinElement(BasisTangle()); }
inline SkeinElement basis_element(const std::string& mu, const std::string& nu) {
  return SkeinElement(BasisTangle(mu, nu));
}
inline SkeinElement gen_a() { return basis_element("+", "+"); }
inline SkeinElement gen_b() { return basis_element("+", "-"); }
inline SkeinElement gen_c() { return basis_element("-", "+"); }
inline SkeinElement gen_d() { return basis_element("-", "-"); }

inline std::string to_string(const SkeinElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x.terms()) {
    std::string t;
    if (c.is_one()) {
      t = k.to_string();
    } else if (c == HalfLaurent(-1)) {
      t = "-" + k.to_string();
    } else {
      t = c.to_factor_string() + " * " + k.to_string();
    }
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

// ---------------------------------------------------------------- slice words

struct Slice {
  enum class Kind : uint8_t { Over, Under, Cap, Cup };
  Kind kind;
  int index;

  friend bool operator==(const Slice& a, const Slice& b) { return a.kind == b.kind && a.index == b.index; }
  friend bool operator<(const Slice& a, const Slice& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.index < b.index;
  }
  std::string to_string() const {
    switch (kind) {
      case Kind::Over: return "x" + std::to_string(index);
      case Kind::Under: return "xb" + std::to_string(index);
      case Kind::Cap: return "cap" + std::to_string(index);
      case Kind::Cup: return "cup" + std::to_string(index);
    }
    return "?";
  }
};

inline Slice Cross(int i) { return {Slice::Kind::Over, i}; }
inline Slice CrossUnder(int i) { return {Slice::Kind::Under, i}; }
inline Slice Cap(int i) { return {Slice::Kind::Cap, i}; }
inline Slice Cup(int i) { return {Slice::Kind::Cup, i}; }

struct SliceWord {
  int west_arity = 0;
  std::vector<Slice> slices;

  SliceWord() = default;
  SliceWord(int west, std::vector<Slice> s) : west_arity(west), slices(std::move(s)) { east_arity(); }

  // Validates every slice index and returns the row count after the last slice.
  int east_arity() const {
    if (west_arity < 0) throw std::invalid_argument("negative west arity");
    int rows = west_arity;
    for (size_t k = 0; k < slices.size(); ++k) {
      const Slice& s = slices[k];
      if (s.index < 0) throw std::invalid_argument("negative slice index in " + s.to_string());
      switch (s.kind) {
        case Slice::Kind::Over:
        case Slice::Kind::Under:
        case Slice::Kind::Cap:
          if (s.index + 1 >= rows)
            throw std::invalid_argument("slice " + std::to_string(k) + " (" + s.to_string() + ") needs rows " +
                                        std::to_string(s.index) + " and " + std::to_string(s.index + 1) +
                                        " but only " + std::to_string(rows) + " row(s) are present");
          if (s.kind == Slice::Kind::Cap) rows -= 2;
          break;
        case Slice::Kind::Cup:
          if (s.index > rows)
            throw std::invalid_argument("slice " + std::to_string(k) + " (" + s.to_string() +
                                        ") inserts at position " + std::to_string(s.index) + " but only " +
                                        std::to_string(rows) + " row(s) are present");
          rows += 2;
          break;
      }
    }
    return rows;
  }

  size_t crossing_count() const {
    return std::count_if(slices.begin(), slices.end(), [](const Slice& s) {
      return s.kind == Slice::Kind::Over || s.kind == Slice::Kind::Under;
    });
  }

  std::string to_string() const {
    std::string out = "tangle(" + std::to_string(west_arity) + "){";
    for (size_t i = 0; i < slices.size(); ++i) out += (i ? ";" : "") + slices[i].to_string();
    return out + "}";
  }

  friend bool operator==(const SliceWord& a, const SliceWord& b) {
    return a.west_arity == b.west_arity && a.slices == b.slices;
  }
  friend bool operator<(const SliceWord& a, const SliceWord& b) {
    return a.west_arity != b.west_arity ? a.west_arity < b.west_arity : a.slices < b.slices;
  }
};

// Sequential composition: a then b (west to east).
inline SliceWord compose(const SliceWord& a, const SliceWord& b) {
  if (a.east_arity() != b.west_arity) throw std::invalid_argument("compose: arity mismatch");
  SliceWord r = a;
  r.slices.insert(r.slices.end(), b.slices.begin(), b.slices.end());
  return r;
}

// Vertical stacking: a's rows above b's rows.
inline SliceWord stack(const SliceWord& a, const SliceWord& b) {
  SliceWord r;
  r.west_arity = a.west_arity + b.west_arity;
  r.slices = a.slices;
  int offset = a.east_arity();
  for (Slice s : b.slices) {
    s.index += offset;
    r.slices.push_back(s);
  }
  return r;
}

struct StatedWord {
  SliceWord word;
  std::string west_states;
  std::string east_states;

  StatedWord() = default;
  StatedWord(SliceWord w, std::string west, std::string east)
      : word(std::move(w)), west_states(std::move(west)), east_states(std::move(east)) {
    validate();
  }

  void validate() const {
    validate_states(west_states);
    validate_states(east_states);
    int e = word.east_arity();
    if (static_cast<int>(west_states.size()) != word.west_arity)
      throw std::invalid_argument("west state count " + std::to_string(west_states.size()) +
                                  " does not match west arity " + std::to_string(word.west_arity));
    if (static_cast<int>(east_states.size()) != e)
      throw std::invalid_argument("east state count " + std::to_string(east_states.size()) +
                                  " does not match east arity " + std::to_string(e));
  }

  std::string to_string() const {
    std::string out = word.to_string();
    if (!west_states.empty()) out += " west=" + west_states;
    if (!east_states.empty()) out += " east=" + east_states;
    return out;
  }

  friend bool operator==(const StatedWord& a, const StatedWord& b) {
    return a.word == b.word && a.west_states == b.west_states && a.east_states == b.east_states;
  }
};

// n parallel strands with the given states.
inline StatedWord parallel_word(const std::string& west, const std::string& east) {
  return StatedWord(SliceWord(static_cast<int>(west.size()), {}), west, east);
}

inline StatedWord parse_diagram(std::string_view text) {
  Cursor c(text);
  c.expect_word("tangle");
  c.expect('(');
  long n = c.integer();
  if (n < 0 || n > 64) c.fail("west arity out of range");
  c.expect(')');
  c.expect('{');
  std::vector<Slice> slices;
  if (!c.accept('}')) {
    for (;;) {
      Slice s{};
      if (c.accept_word("xb")) {
        s.kind = Slice::Kind::Under;
      } else if (c.accept_word("x")) {
        s.kind = Slice::Kind::Over;
      } else if (c.accept_word("cap")) {
        s.kind = Slice::Kind::Cap;
      } else if (c.accept_word("cup")) {
        s.kind = Slice::Kind::Cup;
      } else {
        c.fail("expected slice x, xb, cap or cup");
      }
      c.skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(c.peek_raw()))) c.fail("expected slice index");
      long idx = c.integer();
      if (idx > 1000) c.fail("slice index out of range");
      s.index = static_cast<int>(idx);
      slices.push_back(s);
      if (c.accept(';')) continue;
      c.expect('}');
      break;
    }
  }
  std::string west, east;
  bool have_west = false, have_east = false;
  auto read_signs = [&c]() {
    std::string out;
    while (is_sign(c.peek_raw())) out.push_back(c.get_raw());
    return out;
  };
  while (!c.at_end()) {
    if (!have_west && c.accept_word("west=")) {
      west = read_signs();
      have_west = true;
    } else if (!have_east && c.accept_word("east=")) {
      east = read_signs();
      have_east = true;
    } else {
      c.fail("expected west= or east=");
    }
  }
  SliceWord w;
  w.west_arity = static_cast<int>(n);
  w.slices = std::move(slices);
  StatedWord d;
  d.word = std::move(w);
  d.west_states = west;
  d.east_states = east;
  d.validate();
  return d;
}

// ---------------------------------------------------------------- matchings

// Perfect non-crossing matching of boundary points. Circular order: west points top to bottom
// (indices 0..n_west-1), then east points bottom to top.
struct Matching {
  int n_west = 0;
  int n_east = 0;
  std::vector<int> partner;

  int total() const { return n_west + n_east; }
  // Circular index of the k-th east point counted from the top.
  int east_index(int k) const { return n_west + n_east - 1 - k; }
  bool is_west(int idx) const { return idx < n_west; }
  // Top-to-bottom position of a boundary point on its own edge.
  int edge_position(int idx) const { return idx < n_west ? idx : n_west + n_east - 1 - idx; }

  void validate() const {
    if (static_cast<int>(partner.size()) != total()) throw std::invalid_argument("matching size mismatch");
    for (int i = 0; i < total(); ++i) {
      int j = partner[i];
      if (j < 0 || j >= total() || j == i || partner[j] != i) throw std::invalid_argument("not a perfect matching");
    }
    for (int i = 0; i < total(); ++i)
      for (int k = 0; k < total(); ++k) {
        int j = partner[i], l = partner[k];
        if (i < j && k < l && i < k && k < j && j < l) throw std::invalid_argument("matching is not planar");
      }
  }

  std::string to_string() const {
    std::string out = "match(" + std::to_string(n_west) + "," + std::to_string(n_east) + "){";
    bool first = true;
    for (int i = 0; i < total(); ++i) {
      int j = partner[i];
      if (j < i) continue;
      auto name = [this](int idx) {
        return is_west(idx) ? "w" + std::to_string(edge_position(idx)) : "e" + std::to_string(edge_position(idx));
      };
      out += (first ? "" : ",") + name(i) + "-" + name(j);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.n_west == b.n_west && a.n_east == b.n_east && a.partner == b.partner;
  }
  friend bool operator<(const Matching& a, const Matching& b) {
    if (a.n_west != b.n_west) return a.n_west < b.n_west;
    if (a.n_east != b.n_east) return a.n_east < b.n_east;
    return a.partner < b.partner;
  }
};

// Canonical crossingless slice word realising a matching: caps for west arcs, then cups for east arcs.
inline SliceWord matching_to_word(const Matching& m) {
  m.validate();
  SliceWord w;
  w.west_arity = m.n_west;
  std::vector<int> west;
  for (int i = 0; i < m.n_west; ++i) west.push_back(i);
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t j = 0; j + 1 < west.size(); ++j) {
      if (m.partner[west[j]] == west[j + 1]) {
        w.slices.push_back(Cap(static_cast<int>(j)));
        west.erase(west.begin() + j, west.begin() + j + 2);
        changed = true;
        break;
      }
    }
  }
  std::vector<int> east;
  for (int k = 0; k < m.n_east; ++k) east.push_back(m.east_index(k));
  std::vector<int> removals;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t j = 0; j + 1 < east.size(); ++j) {
      if (m.partner[east[j]] == east[j + 1]) {
        removals.push_back(static_cast<int>(j));
        east.erase(east.begin() + j, east.begin() + j + 2);
        changed = true;
        break;
      }
    }
  }
  if (west.size() != east.size()) throw std::logic_error("matching_to_word: inconsistent through strands");
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) w.slices.push_back(Cup(*it));
  return w;
}

// ---------------------------------------------------------------- crossing resolution

namespace detail {

// Connectivity of the rows at an intermediate slice of a crossingless diagram.
// row_partner[r] >= 0 is a west point, row_partner[r] = -1 - r2 is another current row.
struct PartialState {
  std::vector<int> row_partner;
  std::vector<std::pair<int, int>> west_arcs;

  friend bool operator<(const PartialState& a, const PartialState& b) {
    return a.row_partner != b.row_partner ? a.row_partner < b.row_partner : a.west_arcs < b.west_arcs;
  }
};

inline int row_ref(int r) { return -1 - r; }
inline bool is_row_ref(int v) { return v < 0; }
inline int ref_row(int v) { return -1 - v; }

// Returns true and the loop count increment when a closed loop is formed.
inline bool apply_cap(PartialState& st, int i) {
  int p = st.row_partner[i], p2 = st.row_partner[i + 1];
  bool loop = is_row_ref(p) && ref_row(p) == i + 1;
  auto& rp = st.row_partner;
  rp.erase(rp.begin() + i, rp.begin() + i + 2);
  auto shift = [i](int v) {
    if (is_row_ref(v) && ref_row(v) > i + 1) return row_ref(ref_row(v) - 2);
    return v;
  };
  for (int& v : rp) v = shift(v);
  if (loop) return true;
  p = shift(p);
  p2 = shift(p2);
  if (!is_row_ref(p) && !is_row_ref(p2)) {
    st.west_arcs.emplace_back(std::min(p, p2), std::max(p, p2));
    std::sort(st.west_arcs.begin(), st.west_arcs.end());
  } else if (!is_row_ref(p)) {
    rp[ref_row(p2)] = p;
  } else if (!is_row_ref(p2)) {
    rp[ref_row(p)] = p2;
  } else {
    rp[ref_row(p)] = p2;
    rp[ref_row(p2)] = p;
  }
  return false;
}

inline void apply_cup(PartialState& st, int i) {
  auto& rp = st.row_partner;
  for (int& v : rp)
    if (is_row_ref(v) && ref_row(v) >= i) v = row_ref(ref_row(v) + 2);
  rp.insert(rp.begin() + i, {row_ref(i + 1), row_ref(i)});
}

inline Matching finish(const PartialState& st, int n_west) {
  Matching m;
  m.n_west = n_west;
  m.n_east = static_cast<int>(st.row_partner.size());
  m.partner.assign(m.total(), -1);
  for (auto [a, b] : st.west_arcs) {
    m.partner[a] = b;
    m.partner[b] = a;
  }
  for (int k = 0; k < m.n_east; ++k) {
    int v = st.row_partner[k];
    int idx = m.east_index(k);
    int other = is_row_ref(v) ? m.east_index(ref_row(v)) : v;
    m.partner[idx] = other;
    m.partner[other] = idx;
  }
  return m;
}

}  // namespace detail

// Kauffman resolution: Cross = q Id + q^-1 (Cap;Cup), CrossUnder = q^-1 Id + q (Cap;Cup), loops give delta.
inline std::vector<std::pair<Matching, HalfLaurent>> resolve_to_matchings(const SliceWord& w) {
  w.east_arity();
  using detail::PartialState;
  std::map<PartialState, HalfLaurent> states;
  PartialState init;
  for (int i = 0; i < w.west_arity; ++i) init.row_partner.push_back(i);
  states.emplace(init, HalfLaurent(1));
  const HalfLaurent delta = delta_loop();
  auto add = [](std::map<PartialState, HalfLaurent>& m, const PartialState& s, const HalfLaurent& c) {
    if (c.is_zero()) return;
    auto it = m.find(s);
    if (it == m.end()) {
      m.emplace(s, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  for (const Slice& s : w.slices) {
    std::map<PartialState, HalfLaurent> next;
    for (const auto& [st, coef] : states) {
      switch (s.kind) {
        case Slice::Kind::Cap: {
          PartialState t = st;
          bool loop = detail::apply_cap(t, s.index);
          add(next, t, loop ? coef * delta : coef);
          break;
        }
        case Slice::Kind::Cup: {
          PartialState t = st;
          detail::apply_cup(t, s.index);
          add(next, t, coef);
          break;
        }
        case Slice::Kind::Over:
        case Slice::Kind::Under: {
          bool over = s.kind == Slice::Kind::Over;
          add(next, st, coef * q_pow(over ? 1 : -1));
          PartialState t = st;
          bool loop = detail::apply_cap(t, s.index);
          detail::apply_cup(t, s.index);
          add(next, t, (loop ? coef * delta : coef) * q_pow(over ? -1 : 1));
          break;
        }
      }
    }
    states = std::move(next);
  }
  std::vector<std::pair<Matching, HalfLaurent>> out;
  for (const auto& [st, coef] : states) out.emplace_back(detail::finish(st, w.west_arity), coef);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Crossingless words (canonical form) with coefficients; closed loops already removed.
inline std::vector<std::pair<SliceWord, HalfLaurent>> resolve_crossings(const SliceWord& w) {
  std::vector<std::pair<SliceWord, HalfLaurent>> out;
  for (const auto& [m, c] : resolve_to_matchings(w)) out.emplace_back(matching_to_word(m), c);
  return out;
}

// ---------------------------------------------------------------- reduction

// Memo of parallel-strand evaluations, keyed by the canonical diagram string.
class ReduceCache {
 public:
  static ReduceCache& global() {
    static ReduceCache cache;
    return cache;
  }

  std::optional<SkeinElement> get(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& key, const SkeinElement& value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }
  size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }
  bool enabled() const { return enabled_; }
  void set_enabled(bool on) { enabled_ = on; }

  std::vector<std::pair<std::string, SkeinElement>> snapshot() const {
    std::shared_lock lock(mutex_);
    std::vector<std::pair<std::string, SkeinElement>> out(map_.begin(), map_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, SkeinElement> map_;
  bool enabled_ = true;
};

inline std::string parallel_key(const std::string& west, const std::string& east) {
  return parallel_word(west, east).to_string();
}

// Parallel strands with arbitrary states, sorted by the exchange relations.
inline SkeinElement evaluate_parallel(const std::string& west, const std::string& east) {
  if (is_decreasing(west) && is_decreasing(east)) return SkeinElement(BasisTangle(west, east));
  ReduceCache& cache = ReduceCache::global();
  std::string key;
  if (cache.enabled()) {
    key = parallel_key(west, east);
    if (auto hit = cache.get(key)) return *hit;
  }
  SkeinElement out;
  size_t k = east.find("-+");
  if (k != std::string::npos) {
    std::string swapped = east;
    std::swap(swapped[k], swapped[k + 1]);
    out.add_scaled(evaluate_parallel(west, swapped), BoundaryCoefficients::east_swap());
    HalfLaurent arc = BoundaryCoefficients::Cbar(west[k], west[k + 1]);
    if (!arc.is_zero()) {
      std::string w2 = west, e2 = east;
      w2.erase(k, 2);
      e2.erase(k, 2);
      out.add_scaled(evaluate_parallel(w2, e2), BoundaryCoefficients::east_arc() * arc);
    }
  } else {
    k = west.find("-+");
    std::string swapped = west;
    std::swap(swapped[k], swapped[k + 1]);
    out.add_scaled(evaluate_parallel(swapped, east), BoundaryCoefficients::west_swap());
    HalfLaurent arc = BoundaryCoefficients::C(east[k], east[k + 1]);
    if (!arc.is_zero()) {
      std::string w2 = west, e2 = east;
      w2.erase(k, 2);
      e2.erase(k, 2);
      out.add_scaled(evaluate_parallel(w2, e2), BoundaryCoefficients::west_arc() * arc);
    }
  }
  if (cache.enabled()) cache.put(key, out);
  return out;
}

// Evaluates a crossingless stated matching: innermost returning arcs first, then exchange sorting.
inline SkeinElement evaluate_matching(const Matching& m, const std::string& west, const std::string& east) {
  if (static_cast<int>(west.size()) != m.n_west || static_cast<int>(east.size()) != m.n_east)
    throw std::invalid_argument("evaluate_matching: state length mismatch");
  struct Pt {
    int id;
    char state;
  };
  std::vector<Pt> w, e;
  for (int i = 0; i < m.n_west; ++i) w.push_back({i, west[i]});
  for (int k = 0; k < m.n_east; ++k) e.push_back({m.east_index(k), east[k]});
  HalfLaurent coef(1);
  auto strip = [&](std::vector<Pt>& pts, bool is_west) {
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t j = 0; j + 1 < pts.size(); ++j) {
        if (m.partner[pts[j].id] != pts[j + 1].id) continue;
        HalfLaurent c = is_west ? BoundaryCoefficients::Cbar(pts[j].state, pts[j + 1].state)
                                : BoundaryCoefficients::C(pts[j].state, pts[j + 1].state);
        if (c.is_zero()) return false;
        coef *= c;
        pts.erase(pts.begin() + j, pts.begin() + j + 2);
        changed = true;
        break;
      }
    }
    return true;
  };
  if (!strip(w, true) || !strip(e, false)) return {};
  if (w.size() != e.size()) throw std::logic_error("evaluate_matching: unmatched returning arcs");
  std::string ws, es;
  for (size_t j = 0; j < w.size(); ++j) {
    if (m.partner[w[j].id] != e[j].id) throw std::logic_error("evaluate_matching: non-planar through strands");
    ws.push_back(w[j].state);
    es.push_back(e[j].state);
  }
  return coef * evaluate_parallel(ws, es);
}

inline SkeinElement reduce(const StatedWord& d) {
  d.validate();
  SkeinElement out;
  for (const auto& [m, c] : resolve_to_matchings(d.word)) out.add_scaled(evaluate_matching(m, d.west_states, d.east_states), c);
  return out;
}

// Scalar value of a diagram without boundary points.
inline HalfLaurent bracket(const SliceWord& w) {
  if (w.west_arity != 0 || w.east_arity() != 0) throw std::invalid_argument("bracket needs a closed diagram");
  return reduce(StatedWord(w, "", "")).coefficient(BasisTangle());
}

}  // namespace skeinlab
