#pragma once
// Independent reference evaluator: explicit state sum over all smoothings, union-find tracing,
// boundary arcs removed outermost-last, parallel strands sorted west edge first from the bottom.

#include "skeinlab/diagram.hpp"

#include <map>
#include <numeric>
#include <random>
#include <set>

namespace oracle {

using skeinlab::BasisTangle;
using skeinlab::HalfLaurent;
using skeinlab::SkeinElement;
using skeinlab::Slice;
using skeinlab::SliceWord;
using skeinlab::StatedWord;

inline HalfLaurent s(long e) { return HalfLaurent::s_pow(e); }

// Returning arc on the west edge between adjacent points with states (upper, lower).
inline HalfLaurent west_arc(char upper, char lower) {
  if (upper == '+' && lower == '-') return -s(5);
  if (upper == '-' && lower == '+') return s(1);
  return {};
}
// Returning arc on the east edge.
inline HalfLaurent east_arc(char upper, char lower) {
  if (upper == '+' && lower == '-') return s(-1);
  if (upper == '-' && lower == '+') return -s(-5);
  return {};
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Parallel strands with arbitrary states, sorted by exchange moves; west pairs first, last bad pair first.
inline SkeinElement sort_parallel(const std::string& west, const std::string& east);

// Removes adjacent returning arcs and evaluates the remaining parallel strands.
// west_partner / east_partner: for each point on that edge (top to bottom), the matched point as
// ('w' or 'e', position).
inline SkeinElement evaluate_crossingless(std::vector<std::pair<char, int>> wp, std::vector<std::pair<char, int>> ep,
                                          std::string west, std::string east) {
  HalfLaurent coef(1);
  // Repeatedly pick the lowest adjacent arc on each edge.
  auto strip = [&coef](std::vector<std::pair<char, int>>& part, std::string& states, char side,
                       std::vector<std::pair<char, int>>& other, bool is_west) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = static_cast<int>(part.size()) - 2; i >= 0; --i) {
        if (part[i].first == side && part[i].second == i + 1) {
          coef *= is_west ? west_arc(states[i], states[i + 1]) : east_arc(states[i], states[i + 1]);
          part.erase(part.begin() + i, part.begin() + i + 2);
          states.erase(i, 2);
          // Re-index partners pointing into this edge.
          for (auto& pp : part)
            if (pp.first == side && pp.second > i) pp.second -= 2;
          for (auto& pp : other)
            if (pp.first == side && pp.second > i) pp.second -= 2;
          changed = true;
          break;
        }
      }
    }
  };
  strip(wp, west, 'w', ep, true);
  strip(ep, east, 'e', wp, false);
  if (coef.is_zero()) return {};
  if (west.size() != east.size()) throw std::logic_error("oracle: unmatched boundary");
  for (size_t i = 0; i < wp.size(); ++i)
    if (wp[i] != std::make_pair('e', static_cast<int>(i))) throw std::logic_error("oracle: through strands out of order");
  return coef * sort_parallel(west, east);
}

inline SkeinElement sort_parallel(const std::string& west, const std::string& east) {
  size_t kw = west.rfind("-+");
  if (kw != std::string::npos) {
    // (-,+) on the west -> q^2 swapped - s^5 (east arc between the two strands).
    std::string sw = west;
    std::swap(sw[kw], sw[kw + 1]);
    SkeinElement out = s(4) * sort_parallel(sw, east);
    HalfLaurent arc = east_arc(east[kw], east[kw + 1]);
    if (!arc.is_zero()) {
      std::string w2 = west, e2 = east;
      w2.erase(kw, 2);
      e2.erase(kw, 2);
      out.add_scaled(sort_parallel(w2, e2), -s(5) * arc);
    }
    return out;
  }
  size_t ke = east.rfind("-+");
  if (ke != std::string::npos) {
    std::string se = east;
    std::swap(se[ke], se[ke + 1]);
    SkeinElement out = s(4) * sort_parallel(west, se);
    HalfLaurent arc = west_arc(west[ke], west[ke + 1]);
    if (!arc.is_zero()) {
      std::string w2 = west, e2 = east;
      w2.erase(ke, 2);
      e2.erase(ke, 2);
      out.add_scaled(sort_parallel(w2, e2), s(-1) * arc);
    }
    return out;
  }
  return SkeinElement(BasisTangle(west, east));
}

// Full state sum: every crossing is smoothed both ways, each smoothing traced with union-find.
inline SkeinElement brute_force(const StatedWord& d) {
  const SliceWord& w = d.word;
  std::vector<int> crossing_at;
  for (size_t i = 0; i < w.slices.size(); ++i)
    if (w.slices[i].kind == Slice::Kind::Over || w.slices[i].kind == Slice::Kind::Under)
      crossing_at.push_back(static_cast<int>(i));
  int c = static_cast<int>(crossing_at.size());
  SkeinElement total;
  for (long mask = 0; mask < (1L << c); ++mask) {
    // Node ids: one per (level, row).
    std::vector<int> level_rows;
    int rows = w.west_arity;
    level_rows.push_back(rows);
    for (const auto& sl : w.slices) {
      if (sl.kind == Slice::Kind::Cap) rows -= 2;
      if (sl.kind == Slice::Kind::Cup) rows += 2;
      level_rows.push_back(rows);
    }
    std::vector<int> base(level_rows.size() + 1, 0);
    for (size_t l = 0; l < level_rows.size(); ++l) base[l + 1] = base[l] + level_rows[l];
    UnionFind uf(base.back());
    auto node = [&](size_t level, int row) { return base[level] + row; };
    HalfLaurent weight(1);
    int k = 0;
    for (size_t l = 0; l < w.slices.size(); ++l) {
      const Slice& sl = w.slices[l];
      int n = level_rows[l];
      switch (sl.kind) {
        case Slice::Kind::Over:
        case Slice::Kind::Under: {
          bool identity = ((mask >> k) & 1) == 0;
          ++k;
          bool over = sl.kind == Slice::Kind::Over;
          weight *= identity ? HalfLaurent::q_pow(over ? 1 : -1) : HalfLaurent::q_pow(over ? -1 : 1);
          for (int r = 0; r < n; ++r)
            if (r != sl.index && r != sl.index + 1) uf.unite(node(l, r), node(l + 1, r));
          if (identity) {
            uf.unite(node(l, sl.index), node(l + 1, sl.index));
            uf.unite(node(l, sl.index + 1), node(l + 1, sl.index + 1));
          } else {
            uf.unite(node(l, sl.index), node(l, sl.index + 1));
            uf.unite(node(l + 1, sl.index), node(l + 1, sl.index + 1));
          }
          break;
        }
        case Slice::Kind::Cap:
          uf.unite(node(l, sl.index), node(l, sl.index + 1));
          for (int r = 0; r < n; ++r) {
            if (r < sl.index) uf.unite(node(l, r), node(l + 1, r));
            if (r > sl.index + 1) uf.unite(node(l, r), node(l + 1, r - 2));
          }
          break;
        case Slice::Kind::Cup:
          uf.unite(node(l + 1, sl.index), node(l + 1, sl.index + 1));
          for (int r = 0; r < n; ++r) uf.unite(node(l, r), node(l + 1, r < sl.index ? r : r + 2));
          break;
      }
    }
    size_t last = level_rows.size() - 1;
    int nw = level_rows[0], ne = level_rows[last];
    std::map<int, std::vector<std::pair<char, int>>> comp;
    for (int r = 0; r < nw; ++r) comp[uf.find(node(0, r))].push_back({'w', r});
    for (int r = 0; r < ne; ++r) comp[uf.find(node(last, r))].push_back({'e', r});
    std::vector<std::pair<char, int>> wp(nw), ep(ne);
    for (const auto& [root, pts] : comp) {
      if (pts.size() != 2) throw std::logic_error("oracle: component with " + std::to_string(pts.size()) + " ends");
      auto set = [&](const std::pair<char, int>& a, const std::pair<char, int>& b) {
        (a.first == 'w' ? wp : ep)[a.second] = b;
      };
      set(pts[0], pts[1]);
      set(pts[1], pts[0]);
    }
    std::set<int> roots;
    for (int i = 0; i < base.back(); ++i) roots.insert(uf.find(i));
    int loops = static_cast<int>(roots.size() - comp.size());
    HalfLaurent loop_factor = (-HalfLaurent::q_pow(2) - HalfLaurent::q_pow(-2)).pow(loops);
    total.add_scaled(evaluate_crossingless(wp, ep, d.west_states, d.east_states), weight * loop_factor);
  }
  return total;
}

// Random slice word with bounded crossings and boundary size.
inline SliceWord random_word(std::mt19937_64& rng, int max_crossings, int max_boundary) {
  std::uniform_int_distribution<int> wdist(0, max_boundary);
  for (;;) {
    int west = wdist(rng);
    int rows = west, crossings = 0;
    std::vector<Slice> slices;
    int len = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < len; ++i) {
      int r = std::uniform_int_distribution<int>(0, 9)(rng);
      if (rows >= 2 && crossings < max_crossings && r < 6) {
        int at = std::uniform_int_distribution<int>(0, rows - 2)(rng);
        slices.push_back(r < 3 ? skeinlab::Cross(at) : skeinlab::CrossUnder(at));
        ++crossings;
      } else if (r < 7 && rows + 2 <= 6) {
        slices.push_back(skeinlab::Cup(std::uniform_int_distribution<int>(0, rows)(rng)));
        rows += 2;
      } else if (rows >= 2) {
        slices.push_back(skeinlab::Cap(std::uniform_int_distribution<int>(0, rows - 2)(rng)));
        rows -= 2;
      }
    }
    if (west + rows <= max_boundary) return SliceWord(west, slices);
  }
}

inline std::string random_states(std::mt19937_64& rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? '+' : '-');
  return out;
}

}  // namespace oracle
