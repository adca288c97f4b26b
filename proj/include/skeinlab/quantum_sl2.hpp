#pragma once
// O_{q^2}(SL_2) by generators and relations, its pairing with U_{q^2}(sl_2), and transport to the bigon.

#include "skeinlab/bigon_skein.hpp"
#include "skeinlab/linalg.hpp"

#include <array>
#include <tuple>

namespace skeinlab {

// a^a b^b c^c (d == 0) or d^d b^b c^c (d >= 1, a == 0).
struct PBWMonomial {
  int a = 0, b = 0, c = 0, d = 0;

  PBWMonomial() = default;
  PBWMonomial(int a_, int b_, int c_, int d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a < 0 || b < 0 || c < 0 || d < 0) throw std::invalid_argument("negative PBW exponent");
    if (a > 0 && d > 0) throw std::invalid_argument("PBW monomial cannot contain both a and d");
  }
  static PBWMonomial abc(int i, int j, int k) { return {i, j, k, 0}; }
  static PBWMonomial dbc(int l, int j, int k) { return {0, j, k, l}; }

  int degree() const { return a + b + c + d; }

  // Letters in normal order.
  std::string word() const {
    return std::string(a, 'a') + std::string(d, 'd') + std::string(b, 'b') + std::string(c, 'c');
  }

  std::string to_string() const {
    std::string out;
    auto put = [&](char letter, int e) {
      if (e == 0) return;
      if (!out.empty()) out += "*";
      out += letter;
      if (e > 1) out += "^" + std::to_string(e);
    };
    put('a', a);
    put('d', d);
    put('b', b);
    put('c', c);
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const PBWMonomial& x, const PBWMonomial& y) {
    return std::tie(x.a, x.b, x.c, x.d) == std::tie(y.a, y.b, y.c, y.d);
  }
  friend bool operator<(const PBWMonomial& x, const PBWMonomial& y) {
    int dx = x.degree(), dy = y.degree();
    return std::tie(dx, x.d, x.a, x.b, x.c) < std::tie(dy, y.d, y.a, y.b, y.c);
  }
};

using HopfElement = LinComb<PBWMonomial>;
using HopfTensor = LinComb<std::pair<PBWMonomial, PBWMonomial>>;

inline std::string to_string(const HopfElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    std::string body = m.to_string();
    std::string term;
    if (body == "1") {
      term = c.to_factor_string();
    } else if (c.is_one()) {
      term = body;
    } else if (c == HalfLaurent(-1)) {
      term = "-" + body;
    } else {
      term = c.to_factor_string() + "*" + body;
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

inline HopfElement hopf_one() { return HopfElement(PBWMonomial()); }

// Right multiplication of a normal-form monomial by one letter.
inline HopfElement times_letter(const PBWMonomial& m, char letter) {
  const int j = m.b, k = m.c;
  switch (letter) {
    case 'b':
      return HopfElement(PBWMonomial(m.a, j + 1, k, m.d));
    case 'c':
      return HopfElement(PBWMonomial(m.a, j, k + 1, m.d));
    case 'a': {
      HalfLaurent f = q_pow(2L * (j + k));
      if (m.d == 0) return HopfElement(PBWMonomial(m.a + 1, j, k, 0), f);
      // d a = 1 + q^2 bc
      HopfElement out;
      out.add(PBWMonomial(0, j, k, m.d - 1), f);
      out.add(PBWMonomial(0, j + 1, k + 1, m.d - 1), f * q_pow(2));
      return out;
    }
    case 'd': {
      HalfLaurent f = q_pow(-2L * (j + k));
      if (m.a == 0) return HopfElement(PBWMonomial(0, j, k, m.d + 1), f);
      // a d = 1 + q^-2 bc
      HopfElement out;
      out.add(PBWMonomial(m.a - 1, j, k, 0), f);
      out.add(PBWMonomial(m.a - 1, j + 1, k + 1, 0), f * q_pow(-2));
      return out;
    }
    default:
      throw std::invalid_argument(std::string("unknown generator letter '") + letter + "'");
  }
}

inline HopfElement times_letter(const HopfElement& x, char letter) {
  HopfElement out;
  for (const auto& [m, c] : x.terms()) out.add_scaled(times_letter(m, letter), c);
  return out;
}

// Normal form of a free word in a, b, c, d.
inline HopfElement normalize(std::string_view word) {
  HopfElement x = hopf_one();
  for (char l : word) x = times_letter(x, l);
  return x;
}

inline HopfElement hopf_mul(const HopfElement& x, const HopfElement& y) {
  HopfElement out;
  for (const auto& [my, cy] : y.terms()) {
    HopfElement acc = x;
    for (char l : my.word()) acc = times_letter(acc, l);
    out.add_scaled(acc, cy);
  }
  return out;
}

inline HopfElement hopf_generator(char letter) { return normalize(std::string(1, letter)); }

inline HopfTensor hopf_tensor(const HopfElement& x, const HopfElement& y) {
  HopfTensor out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out.add({mx, my}, cx * cy);
  return out;
}

inline HopfTensor hopf_tensor_mul(const HopfTensor& x, const HopfTensor& y) {
  HopfTensor out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      HopfElement l = hopf_mul(HopfElement(kx.first), HopfElement(ky.first));
      HopfElement r = hopf_mul(HopfElement(kx.second), HopfElement(ky.second));
      out.add_scaled(hopf_tensor(l, r), cx * cy);
    }
  return out;
}

// Generator index: a = x_{++}, b = x_{+-}, c = x_{-+}, d = x_{--}.
inline char letter_of(char row, char col) {
  if (row == '+') return col == '+' ? 'a' : 'b';
  return col == '+' ? 'c' : 'd';
}
inline std::pair<char, char> indices_of(char letter) {
  switch (letter) {
    case 'a':
      return {'+', '+'};
    case 'b':
      return {'+', '-'};
    case 'c':
      return {'-', '+'};
    case 'd':
      return {'-', '-'};
    default:
      throw std::invalid_argument("unknown generator letter");
  }
}

inline HopfTensor hopf_comul_letter(char letter) {
  auto [i, j] = indices_of(letter);
  HopfTensor out;
  for (char s : std::string("+-"))
    out += hopf_tensor(hopf_generator(letter_of(i, s)), hopf_generator(letter_of(s, j)));
  return out;
}

inline HopfTensor hopf_comul(const HopfElement& x) {
  static Memo<PBWMonomial, HopfTensor> memo;
  HopfTensor out;
  for (const auto& [m, c] : x.terms()) {
    HopfTensor dm = memo.get_or_compute(m, [&] {
      HopfTensor acc = hopf_tensor(hopf_one(), hopf_one());
      for (char l : m.word()) acc = hopf_tensor_mul(acc, hopf_comul_letter(l));
      return acc;
    });
    out.add_scaled(dm, c);
  }
  return out;
}

inline HalfLaurent hopf_counit(const HopfElement& x) {
  HalfLaurent acc;
  for (const auto& [m, c] : x.terms())
    if (m.b == 0 && m.c == 0) acc += c;
  return acc;
}

// S(a) = d, S(b) = -q^2 b, S(c) = -q^-2 c, S(d) = a, extended anti-multiplicatively.
inline HopfElement hopf_antipode(const HopfElement& x) {
  HopfElement out;
  for (const auto& [m, c] : x.terms()) {
    std::string w = m.word();
    HopfElement acc = hopf_one();
    HalfLaurent coef = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      switch (*it) {
        case 'a':
          acc = times_letter(acc, 'd');
          break;
        case 'd':
          acc = times_letter(acc, 'a');
          break;
        case 'b':
          acc = times_letter(acc, 'b');
          coef *= -q_pow(2);
          break;
        case 'c':
          acc = times_letter(acc, 'c');
          coef *= -q_pow(-2);
          break;
      }
    }
    out.add_scaled(acc, coef);
  }
  return out;
}

// U_{q^2}(sl_2) generators acting through the pairing.
enum class UGenerator { E, F, K, Kinv };

inline std::string to_string(UGenerator g) {
  switch (g) {
    case UGenerator::E:
      return "E";
    case UGenerator::F:
      return "F";
    case UGenerator::K:
      return "K";
    case UGenerator::Kinv:
      return "Kinv";
  }
  return "?";
}

// Action of a generator on V, basis (v+, v-).
inline Matrix u_generator_on_V(UGenerator g) {
  Matrix m(2, 2);
  switch (g) {
    case UGenerator::E:
      m(0, 1) = HalfLaurent(1);
      break;
    case UGenerator::F:
      m(1, 0) = HalfLaurent(1);
      break;
    case UGenerator::K:
      m(0, 0) = q_pow(2);
      m(1, 1) = q_pow(-2);
      break;
    case UGenerator::Kinv:
      m(0, 0) = q_pow(-2);
      m(1, 1) = q_pow(2);
      break;
  }
  return m;
}

// Action on V^{(x)k} via Delta(E) = 1 (x) E + E (x) K, Delta(F) = K^-1 (x) F + F (x) 1.
inline Matrix u_generator_on_tensor_power(UGenerator g, int k) {
  if (k == 0) {
    Matrix m(1, 1);
    m(0, 0) = HalfLaurent(g == UGenerator::E || g == UGenerator::F ? 0 : 1);
    return m;
  }
  auto power = [](const Matrix& x, int n) {
    Matrix r = Matrix::identity(1);
    for (int i = 0; i < n; ++i) r = kron(r, x);
    return r;
  };
  Matrix gv = u_generator_on_V(g);
  if (g == UGenerator::K || g == UGenerator::Kinv) return power(gv, k);
  Matrix id = Matrix::identity(2);
  Matrix left = g == UGenerator::E ? id : u_generator_on_V(UGenerator::Kinv);
  Matrix right = g == UGenerator::E ? u_generator_on_V(UGenerator::K) : id;
  Matrix out(size_t(1) << k, size_t(1) << k);
  for (int p = 0; p < k; ++p) out = out + kron(kron(power(left, p), gv), power(right, k - 1 - p));
  return out;
}

inline Matrix u_word_on_tensor_power(const std::vector<UGenerator>& word, int k) {
  Matrix m = Matrix::identity(size_t(1) << k);
  for (UGenerator g : word) m = m * u_generator_on_tensor_power(g, k);
  return m;
}

inline size_t state_index(std::string_view states) {
  size_t idx = 0;
  for (char c : states) idx = idx * 2 + (c == '-' ? 1 : 0);
  return idx;
}

// <u, x> for a word u = u_1 u_2 ... in the generators.
inline HalfLaurent pairing(const std::vector<UGenerator>& word, const HopfElement& x) {
  HalfLaurent acc;
  std::map<int, Matrix> cache;
  for (const auto& [m, c] : x.terms()) {
    int k = m.degree();
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, u_word_on_tensor_power(word, k)).first;
    std::string rows, cols;
    for (char l : m.word()) {
      auto [i, j] = indices_of(l);
      rows.push_back(i);
      cols.push_back(j);
    }
    acc += c * it->second(state_index(rows), state_index(cols));
  }
  return acc;
}

inline HalfLaurent pairing(UGenerator g, const HopfElement& x) { return pairing(std::vector<UGenerator>{g}, x); }

// Transport to the bigon: a -> beta(+;+), b -> beta(+;-), c -> beta(-;+), d -> beta(-;-).
inline SkeinElement to_skein(const HopfElement& x) {
  static Memo<PBWMonomial, SkeinElement> memo;
  SkeinElement out;
  for (const auto& [m, c] : x.terms()) {
    SkeinElement img = memo.get_or_compute(m, [&] {
      SkeinElement acc = unit_element();
      for (char l : m.word()) {
        auto [i, j] = indices_of(l);
        acc = mul(acc, SkeinElement(BasisTangle(std::string(1, i), std::string(1, j))));
      }
      return acc;
    });
    out.add_scaled(img, c);
  }
  return out;
}

inline HopfElement from_skein(const SkeinElement& y) {
  HopfElement out;
  for (const auto& [k, c] : y.terms()) {
    std::string w;
    for (size_t i = 0; i < k.n(); ++i) w.push_back(letter_of(k.mu[i], k.nu[i]));
    out.add_scaled(normalize(w), c);
  }
  return out;
}

inline HopfTensor from_skein(const TensorElement& t) {
  HopfTensor out;
  for (const auto& [k, c] : t.terms())
    out.add_scaled(hopf_tensor(from_skein(SkeinElement(k.at(0))), from_skein(SkeinElement(k.at(1)))), c);
  return out;
}

inline std::vector<PBWMonomial> pbw_basis_of_degree(int n) {
  std::vector<PBWMonomial> out;
  for (int j = 0; j <= n; ++j)
    for (int k = 0; j + k <= n; ++k) {
      int r = n - j - k;
      out.push_back(PBWMonomial::abc(r, j, k));
      if (r > 0) out.push_back(PBWMonomial::dbc(r, j, k));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Expressions over O_{q^2}(SL_2): a, b, c, d, scalars, + - * ^.
struct HopfTraits {
  using T = HopfElement;
  static T from_scalar(const HalfLaurent& x) { return x * hopf_one(); }
  static T mul(const T& a, const T& b) { return hopf_mul(a, b); }
  static T pow(const T& a, long e) {
    if (e < 0) {
      if (a.size() == 1 && a.terms().begin()->first.degree() == 0)
        return from_scalar(a.terms().begin()->second.pow(e));
      throw std::domain_error("negative power of a non-scalar element");
    }
    T r = hopf_one();
    for (long i = 0; i < e; ++i) r = hopf_mul(r, a);
    return r;
  }
  static T atom(const std::string& name, Cursor& c) {
    if (name.size() == 1 && std::string("abcd").find(name[0]) != std::string::npos) return hopf_generator(name[0]);
    c.fail("unknown generator '" + name + "'");
  }
};

inline HopfElement parse_hopf(std::string_view text) {
  Cursor c(text);
  ExprParser<HopfTraits> p(c);
  return p.parse_all();
}

}  // namespace skeinlab
