#pragma once
// Exact Laurent polynomials in s = q^{1/2} with rational coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab {

using Rational = mpq_class;

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace detail {
inline long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}
inline long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}
}  // namespace detail

class HalfLaurent {
 public:
  using Term = std::pair<long, Rational>;

  HalfLaurent() = default;
  HalfLaurent(int c) : HalfLaurent(Rational(c)) {}
  HalfLaurent(long c) : HalfLaurent(Rational(c)) {}
  HalfLaurent(const Rational& c) {
    if (c != 0) terms_.emplace_back(0, c);
  }

  static HalfLaurent monomial(const Rational& c, long exp_s) {
    HalfLaurent r;
    if (c != 0) r.terms_.emplace_back(exp_s, c);
    return r;
  }
  static HalfLaurent s_pow(long e) { return monomial(1, e); }
  static HalfLaurent q_pow(long e) { return monomial(1, detail::checked_mul(2, e)); }
  static HalfLaurent from_terms(const std::map<long, Rational>& m) {
    HalfLaurent r;
    for (const auto& [e, c] : m)
      if (c != 0) r.terms_.emplace_back(e, c);
    return r;
  }

  // Ascending exponent order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
  long min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  long max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

  Rational coefficient(long e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, long x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
  }

  HalfLaurent operator-() const {
    HalfLaurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  HalfLaurent& operator+=(const HalfLaurent& o) {
    terms_ = merge(terms_, o.terms_, false);
    return *this;
  }
  HalfLaurent& operator-=(const HalfLaurent& o) {
    terms_ = merge(terms_, o.terms_, true);
    return *this;
  }
  HalfLaurent& operator*=(const HalfLaurent& o) {
    *this = *this * o;
    return *this;
  }

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return a.scaled(b.terms_[0].second, b.terms_[0].first);
    if (a.is_monomial()) return b.scaled(a.terms_[0].second, a.terms_[0].first);
    std::map<long, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[detail::checked_add(ea, eb)] += ca * cb;
    return from_terms(acc);
  }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

  // Multiply by c * s^e.
  HalfLaurent scaled(const Rational& c, long e) const {
    if (c == 0) return {};
    HalfLaurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [ex, cx] : terms_) r.terms_.emplace_back(detail::checked_add(ex, e), cx * c);
    return r;
  }

  // Inverse of a nonzero monomial; other elements are not units.
  HalfLaurent inverse() const {
    if (!is_monomial()) throw std::domain_error("only monomials are invertible: " + to_string());
    return monomial(1 / terms_[0].second, -terms_[0].first);
  }

  HalfLaurent pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    HalfLaurent result(1), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  Rational specialize(const Rational& s0) const {
    if (s0 == 0) throw std::domain_error("specialization point must be nonzero");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * rational_pow(s0, e);
    return acc;
  }

  static Rational rational_pow(const Rational& x, long e) {
    Rational base = e < 0 ? Rational(1 / x) : x;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
  }

  // Descending exponents, e.g. "-s^4 - s^-4".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string t = term_string(it->second, it->first);
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

  // Parenthesised when it has more than one term.
  std::string to_factor_string() const {
    std::string s = to_string();
    return terms_.size() > 1 ? "(" + s + ")" : s;
  }

  friend bool operator<(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
      if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
    }
    return false;
  }

 private:
  std::vector<Term> terms_;

  static std::string term_string(const Rational& c, long e) {
    if (e == 0) return c.get_str();
    std::string var = e == 1 ? "s" : "s^" + std::to_string(e);
    if (c == 1) return var;
    if (c == -1) return "-" + var;
    return c.get_str() + "*" + var;
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
        ++j;
      } else {
        Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
        if (c != 0) out.emplace_back(a[i].first, c);
        ++i;
        ++j;
      }
    }
    return out;
  }
};

inline HalfLaurent s_pow(long e) { return HalfLaurent::s_pow(e); }
inline HalfLaurent q_pow(long e) { return HalfLaurent::q_pow(e); }
// Loop value -q^2 - q^-2.
inline HalfLaurent delta_loop() { return -q_pow(2) - q_pow(-2); }

inline Rational specialize(const HalfLaurent& x, const Rational& s0) { return x.specialize(s0); }

// Rejects points where q would be a root of unity.
inline void validate_specialization(const Rational& s0) {
  if (s0 == 0) throw std::domain_error("specialization point must be nonzero");
  if (s0 == 1 || s0 == -1) throw std::domain_error("specialization point must not be +1 or -1");
}

inline std::vector<Rational> default_specializations() { return {Rational(7, 5), Rational(11, 7)}; }

}  // namespace skeinlab
