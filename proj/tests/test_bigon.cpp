#include "oracle.hpp"
#include "random.hpp"
#include "skeinlab/internal_skein.hpp"

#include <gtest/gtest.h>

using namespace skeinlab;

namespace {

const SkeinElement A = gen_a(), B = gen_b(), C = gen_c(), D = gen_d(), ONE = unit_element();

SkeinElement el(const char* text) { return parse_skein(text); }

// m o (f (x) g) o Delta, with f and g given as maps on elements.
template <class F, class G>
SkeinElement convolve_maps(const SkeinElement& x, F f, G g) {
  SkeinElement out;
  TensorElement dx = comul(x);
  for (const auto& [k, c] : dx.terms()) out.add_scaled(mul(f(SkeinElement(k[0])), g(SkeinElement(k[1]))), c);
  return out;
}

TensorElement comul_tensor(const TensorElement& t, size_t pos) {
  return expand_at(t, pos, [](const BasisTangle& k) { return comul(SkeinElement(k)); });
}

}  // namespace

TEST(Bigon, DefiningRelations) {
  EXPECT_EQ(mul(A, D) - q_pow(-2) * mul(B, C), ONE);
  EXPECT_EQ(mul(D, A) - q_pow(2) * mul(C, B), ONE);
  EXPECT_TRUE((mul(C, A) - q_pow(2) * mul(A, C)).is_zero());
  EXPECT_TRUE((mul(B, A) - q_pow(2) * mul(A, B)).is_zero());
  EXPECT_TRUE((mul(D, B) - q_pow(2) * mul(B, D)).is_zero());
  EXPECT_TRUE((mul(D, C) - q_pow(2) * mul(C, D)).is_zero());
  EXPECT_EQ(mul(B, C), mul(C, B));
}

TEST(Bigon, CoproductCounitAntipodeOnGenerators) {
  EXPECT_EQ(comul(A), tensor(A, A) + tensor(B, C));
  EXPECT_EQ(comul(B), tensor(A, B) + tensor(B, D));
  EXPECT_EQ(comul(C), tensor(C, A) + tensor(D, C));
  EXPECT_EQ(comul(D), tensor(C, B) + tensor(D, D));
  EXPECT_TRUE(counit(B).is_zero());
  EXPECT_TRUE(counit(A).is_one());
  EXPECT_TRUE(counit(mul(A, D)).is_one());
  EXPECT_EQ(antipode(A), D);
  EXPECT_EQ(antipode(D), A);
  EXPECT_EQ(antipode(B), -q_pow(2) * B);
  EXPECT_EQ(antipode(C), -q_pow(-2) * C);
}

TEST(Bigon, RotationOnGenerators) {
  EXPECT_EQ(rot_star(A), A);
  EXPECT_EQ(rot_star(B), C);
  EXPECT_EQ(rot_star(C), B);
  EXPECT_EQ(rot_star(D), D);
}

TEST(Bigon, HalfTwistValues) {
  EXPECT_TRUE(t_form(A).is_zero());
  EXPECT_TRUE(t_form(D).is_zero());
  EXPECT_EQ(t_form(B), -s_pow(5));
  EXPECT_EQ(t_form(C), s_pow(1));
  // t^{-1} is the inverse matrix of (0, -s^5; s, 0).
  EXPECT_EQ(t_inv_form(B), s_pow(-1));
  EXPECT_EQ(t_inv_form(C), -s_pow(-5));
  EXPECT_EQ(ht_coaction(A), s_pow(1) * B);
  EXPECT_EQ(inv_edge(B, BigonSkein::Edge::East, false), s_pow(-1) * A);
  EXPECT_EQ(t_form(B), counit(inv_edge(B, BigonSkein::Edge::East, true)));
}

TEST(Bigon, RAndThetaValues) {
  const SkeinElement g[4] = {A, B, C, D};
  // Row-major table over (x, y) in {a, b, c, d}^2.
  const HalfLaurent q = q_pow(1), qi = q_pow(-1), z;
  const HalfLaurent table[4][4] = {
      {q, z, z, qi}, {z, z, q - q_pow(-3), z}, {z, z, z, z}, {qi, z, z, q}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(r_form(g[i], g[j]), table[i][j]) << i << "," << j;
  EXPECT_EQ(theta_form(A), -q_pow(3));
  EXPECT_EQ(theta_form(D), -q_pow(3));
  EXPECT_TRUE(theta_form(B).is_zero());
  EXPECT_TRUE(theta_form(C).is_zero());
}

TEST(Bigon, BraidedOppositeExamples) {
  EXPECT_EQ(braided_opposite_mul(A, A), reduce(crossed_stacking(BasisTangle("+", "+"), BasisTangle("+", "+"))));
  EXPECT_EQ(braided_opposite_mul(B, C), reduce(crossed_stacking(BasisTangle("+", "-"), BasisTangle("-", "+"))));
}

TEST(Bigon, ParseSkein) {
  EXPECT_EQ(el("a*d - q^-2*b*c"), ONE);
  EXPECT_EQ(el("beta(-+;+-)"), reduce(parallel_word("-+", "+-")));
  EXPECT_EQ(el("2*s*beta(+-;+-)"), HalfLaurent(2) * s_pow(1) * basis_element("+-", "+-"));
  EXPECT_THROW(el("beta(+;+-)"), ParseError);
  EXPECT_THROW(el("e"), ParseError);
}

TEST(BigonOracle, ProductMatchesBruteForceStacking) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m + n <= 3; ++m)
      for (const auto& x : basis_of_degree(n))
        for (const auto& y : basis_of_degree(m))
          EXPECT_EQ(mul(SkeinElement(x), SkeinElement(y)), oracle::brute_force(parallel_word(x.mu + y.mu, x.nu + y.nu)));
}

TEST(BigonOracle, CoproductMatchesHopfSide) {
  for (int n = 0; n <= 3; ++n)
    for (const auto& m : pbw_basis_of_degree(n)) {
      HopfElement x(m);
      TensorElement want;
      HopfTensor dx = hopf_comul(x);
      for (const auto& [k, c] : dx.terms())
        want.add_scaled(tensor(to_skein(HopfElement(k.first)), to_skein(HopfElement(k.second))), c);
      EXPECT_EQ(comul(to_skein(x)), want) << m.to_string();
    }
}

TEST(BigonProperty, HopfAxiomsOnRandomElements) {
  std::mt19937_64 rng(3);
  auto id = [](const SkeinElement& y) { return y; };
  auto eps = [](const SkeinElement& y) { return counit(y) * unit_element(); };
  for (int i = 0; i < 40; ++i) {
    SkeinElement x = gen::element(rng, 2), y = gen::element(rng, 1);
    TensorElement dx = comul(x);
    EXPECT_EQ(comul_tensor(dx, 0), comul_tensor(dx, 1));
    EXPECT_EQ(convolve_maps(x, eps, id), x);
    EXPECT_EQ(convolve_maps(x, id, eps), x);
    EXPECT_EQ(convolve_maps(x, [](const SkeinElement& u) { return antipode(u); }, id), counit(x) * ONE);
    EXPECT_EQ(convolve_maps(x, id, [](const SkeinElement& u) { return antipode(u); }), counit(x) * ONE);
    EXPECT_EQ(antipode(antipode_inverse(x)), x);
    EXPECT_EQ(counit(mul(x, y)), counit(x) * counit(y));
    EXPECT_EQ(antipode(mul(x, y)), mul(antipode(y), antipode(x)));
    EXPECT_EQ(rot_star(mul(x, y)), mul(rot_star(x), rot_star(y)));
    EXPECT_EQ(rot_star(rot_star(x)), x);
    EXPECT_EQ(parse_skein(to_string(x)), x);
  }
}

TEST(BigonProperty, CoribbonAndHalfRibbonLaws) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    SkeinElement x = gen::element(rng, 2);
    // t * t^{-1} = counit, t * t = theta.
    HalfLaurent conv, square;
    TensorElement dx = comul(x);
    for (const auto& [k, c] : dx.terms()) {
      conv += c * t_form(SkeinElement(k[0])) * t_inv_form(SkeinElement(k[1]));
      square += c * t_form(SkeinElement(k[0])) * t_form(SkeinElement(k[1]));
    }
    EXPECT_EQ(conv, counit(x));
    EXPECT_EQ(square, theta_form(x));
    EXPECT_EQ(ht_coaction(inv_edge(x, BigonSkein::Edge::East, false)), x);
    // Centrality of theta as a convolution.
    SkeinElement left, right;
    for (const auto& [k, c] : dx.terms()) {
      left.add_scaled(SkeinElement(k[1]), c * theta_form(SkeinElement(k[0])));
      right.add_scaled(SkeinElement(k[0]), c * theta_form(SkeinElement(k[1])));
    }
    EXPECT_EQ(left, right);
  }
}

TEST(BigonProperty, ExchangeLaw) {
  // R(x1, y1) x2 y2 = y1 x1 R(x2, y2) on all pairs with at most 2 strands each.
  for (const auto& xb : basis_up_to(2))
    for (const auto& yb : basis_up_to(2)) {
      TensorElement dx = comul(SkeinElement(xb)), dy = comul(SkeinElement(yb));
      SkeinElement lhs, rhs;
      for (const auto& [kx, cx] : dx.terms())
        for (const auto& [ky, cy] : dy.terms()) {
          lhs.add_scaled(mul(SkeinElement(kx[1]), SkeinElement(ky[1])),
                         cx * cy * r_form(SkeinElement(kx[0]), SkeinElement(ky[0])));
          rhs.add_scaled(mul(SkeinElement(ky[0]), SkeinElement(kx[0])),
                         cx * cy * r_form(SkeinElement(kx[1]), SkeinElement(ky[1])));
        }
      EXPECT_EQ(lhs, rhs) << xb.to_string() << " " << yb.to_string();
    }
}
