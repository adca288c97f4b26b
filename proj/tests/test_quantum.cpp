#include "random.hpp"

#include <gtest/gtest.h>

using namespace skeinlab;

namespace {

HopfElement mono(int a, int b, int c, int d) { return HopfElement(PBWMonomial(a, b, c, d)); }

using Word = std::vector<UGenerator>;
const UGenerator E = UGenerator::E, F = UGenerator::F, K = UGenerator::K, Ki = UGenerator::Kinv;

// Pairing with a linear combination of words.
HalfLaurent pair(const std::vector<std::pair<HalfLaurent, Word>>& u, const HopfElement& x) {
  HalfLaurent out;
  for (const auto& [c, w] : u) out += c * pairing(w, x);
  return out;
}

}  // namespace

TEST(Quantum, NormalForms) {
  EXPECT_EQ(normalize("ad"), hopf_one() + q_pow(-2) * mono(0, 1, 1, 0));
  EXPECT_EQ(normalize("ba"), q_pow(2) * mono(1, 1, 0, 0));
  EXPECT_EQ(normalize("ca"), q_pow(2) * mono(1, 0, 1, 0));
  EXPECT_EQ(normalize("cb"), mono(0, 1, 1, 0));
  EXPECT_EQ(normalize("da") - q_pow(2) * normalize("cb"), hopf_one());
  EXPECT_EQ(to_string(normalize("ad")), "1 + s^-4*b*c");
  EXPECT_EQ(parse_hopf("a*d - q^-2*b*c"), hopf_one());
  EXPECT_THROW(parse_hopf("a*e"), ParseError);
  EXPECT_THROW(PBWMonomial(1, 0, 0, 1), std::invalid_argument);
}

TEST(Quantum, HopfStructureOnGenerators) {
  HopfElement a = hopf_generator('a'), b = hopf_generator('b'), c = hopf_generator('c'), d = hopf_generator('d');
  EXPECT_EQ(hopf_comul(b), hopf_tensor(a, b) + hopf_tensor(b, d));
  EXPECT_EQ(hopf_comul(a), hopf_tensor(a, a) + hopf_tensor(b, c));
  EXPECT_EQ(hopf_antipode(c), -q_pow(-2) * c);
  EXPECT_EQ(hopf_antipode(b), -q_pow(2) * b);
  EXPECT_EQ(hopf_antipode(a), d);
  EXPECT_TRUE(hopf_counit(c).is_zero());
  EXPECT_TRUE(hopf_counit(normalize("ad")).is_one());
}

TEST(Quantum, PairingValues) {
  HopfElement a = hopf_generator('a'), b = hopf_generator('b'), c = hopf_generator('c'), d = hopf_generator('d');
  EXPECT_TRUE(pairing(E, b).is_one());
  EXPECT_TRUE(pairing(F, c).is_one());
  EXPECT_TRUE(pairing(E, a).is_zero());
  EXPECT_EQ(pairing(K, a), q_pow(2));
  EXPECT_EQ(pairing(K, d), q_pow(-2));
  EXPECT_TRUE(pairing(K, normalize("ad")).is_one());
  EXPECT_TRUE(pairing(K, hopf_one()).is_one());
}

TEST(Quantum, EFRelationThroughPairing) {
  HalfLaurent denom_inv_check = q_pow(2) - q_pow(-2);
  for (int n = 0; n <= 2; ++n)
    for (const auto& m : pbw_basis_of_degree(n)) {
      HopfElement x(m);
      HalfLaurent lhs = pairing(Word{E, F}, x) - pairing(Word{F, E}, x);
      HalfLaurent rhs = pairing(K, x) - pairing(Ki, x);
      EXPECT_EQ(lhs * denom_inv_check, rhs) << m.to_string();
    }
}

TEST(Quantum, PairingIntertwinesAntipodes) {
  // S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1.
  const HalfLaurent one(1), minus(-1);
  std::vector<std::pair<Word, std::vector<std::pair<HalfLaurent, Word>>>> cases = {
      {{E}, {{minus, {E, Ki}}}}, {{F}, {{minus, {K, F}}}}, {{K}, {{one, {Ki}}}}, {{Ki}, {{one, {K}}}}};
  for (int n = 0; n <= 2; ++n)
    for (const auto& m : pbw_basis_of_degree(n))
      for (const auto& [u, su] : cases) {
        HopfElement x(m);
        EXPECT_EQ(pair(su, x), pairing(u, hopf_antipode(x))) << to_string(u[0]) << " " << m.to_string();
      }
}

TEST(Quantum, TransportDictionary) {
  EXPECT_EQ(to_skein(hopf_generator('a')), gen_a());
  EXPECT_EQ(to_skein(hopf_generator('b')), gen_b());
  EXPECT_EQ(to_skein(hopf_generator('c')), gen_c());
  EXPECT_EQ(to_skein(hopf_generator('d')), gen_d());
  EXPECT_EQ(from_skein(basis_element("+-", "+-")), normalize("ad"));
  EXPECT_EQ(to_skein(normalize("ad")), mul(gen_a(), gen_d()));
  EXPECT_EQ(to_skein(normalize("ad")), unit_element() + q_pow(-2) * mul(gen_b(), gen_c()));
}

TEST(Quantum, TransportIsomorphismLowDegree) {
  for (int n = 0; n <= 3; ++n)
    for (const auto& m : pbw_basis_of_degree(n)) {
      HopfElement x(m);
      EXPECT_EQ(from_skein(to_skein(x)), x) << m.to_string();
    }
  for (int n = 0; n <= 2; ++n)
    for (const auto& k : basis_of_degree(n)) EXPECT_EQ(to_skein(from_skein(SkeinElement(k))), SkeinElement(k));
}

TEST(QuantumProperty, HopfAxiomsAndTransport) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    HopfElement x = gen::hopf(rng, 2), y = gen::hopf(rng, 1);
    HopfElement xy = hopf_mul(x, y);
    EXPECT_EQ(hopf_comul(xy), hopf_tensor_mul(hopf_comul(x), hopf_comul(y)));
    EXPECT_EQ(hopf_counit(xy), hopf_counit(x) * hopf_counit(y));
    HopfElement conv;
    HopfTensor dx = hopf_comul(x);
    for (const auto& [k, c] : dx.terms())
      conv.add_scaled(hopf_mul(hopf_antipode(HopfElement(k.first)), HopfElement(k.second)), c);
    EXPECT_EQ(conv, hopf_counit(x) * hopf_one());
    EXPECT_EQ(to_skein(xy), mul(to_skein(x), to_skein(y)));
    EXPECT_EQ(from_skein(comul(to_skein(x))), hopf_comul(x));
    EXPECT_EQ(parse_hopf(to_string(x)), x);
  }
}
