#include <gtest/gtest.h>

#include "heiscay/error.hpp"
#include "heiscay/heisenberg.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

namespace heiscay {
namespace {

HeisElem elem(const Params& p, std::vector<long long> a, long long c) {
  return make_elem(p, a, c);
}

TEST(MakeParams, OddAndEvenM) {
  const Params odd = make_params(3, 3);
  EXPECT_EQ(odd.k, 3);
  EXPECT_EQ(odd.n, 1);
  EXPECT_EQ(odd.m, 3);
  EXPECT_EQ(odd.kind, QuotientKind::N);

  const Params even = make_params(3, 2);
  EXPECT_EQ(even.n, 1);
  EXPECT_EQ(even.kind, QuotientKind::E);
}

TEST(MakeParams, RejectsCompositeKAndTrivialM) {
  try {
    make_params(9, 2);
    FAIL() << "composite k accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrimeK);
  }
  EXPECT_THROW(make_params(2, 3), Error);
  try {
    make_params(3, 1);
    FAIL() << "m = 1 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VacuousM);
    EXPECT_NE(std::string(e.what()).find("vacuous"), std::string::npos);
  }
}

TEST(VVector, SmallN) {
  EXPECT_EQ(v_vector(1), (std::vector<int>{1, 1}));
  EXPECT_EQ(v_vector(2), (std::vector<int>{0, 1, 1, 1}));
  EXPECT_EQ(v_vector(3), (std::vector<int>{1, 0, 1, 1, 1, 1}));
}

TEST(VVector, FirstEntryHasParityOfN) {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<int> v = v_vector(n);
    EXPECT_EQ(v, oracle::default_v(n)) << "n=" << n;
    EXPECT_EQ(v[0], n % 2) << "n=" << n;
    int upper = v[0];
    for (int i = n; i < 2 * n; ++i) upper += v[i];
    EXPECT_EQ(upper % 2, 0) << "n=" << n;
  }
}

TEST(Identity, AllZero) {
  EXPECT_EQ(label(identity(make_params(3, 3))), "(0,0|0)");
  EXPECT_EQ(label(identity(make_params(5, 2))), "(0,0,0,0|0)");
}

TEST(Multiply, GeneratorsCommuteUpToZ) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(multiply(p, gen_x(p, 1), gen_x(p, 2)), elem(p, {1, 1}, 0));
  EXPECT_EQ(multiply(p, gen_x(p, 2), gen_x(p, 1)), elem(p, {1, 1}, 2));
  const HeisElem g = elem(p, {2, 1}, 1);
  EXPECT_EQ(multiply(p, g, identity(p)), g);
  EXPECT_EQ(multiply(p, identity(p), g), g);
}

TEST(Multiply, EvenQuotientSquareOfX1IsZ) {
  const Params p = make_params(3, 2);
  EXPECT_EQ(multiply(p, gen_x(p, 1), gen_x(p, 1)), elem(p, {0, 0}, 1));
}

TEST(Multiply, MixedParamsRejected) {
  const Params p = make_params(3, 3);
  const Params q = make_params(3, 5);
  try {
    multiply(p, gen_x(p, 1), gen_x(q, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParamMismatch);
  }
}

TEST(Inverse, Examples) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(inverse(p, identity(p)), identity(p));
  EXPECT_EQ(inverse(p, elem(p, {1, 1}, 2)), elem(p, {2, 2}, 0));

  const Params e = make_params(3, 2);
  EXPECT_EQ(inverse(e, gen_x(e, 1)), elem(e, {1, 0}, 1));
}

TEST(Power, Examples) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(power(p, gen_z(p), 3), identity(p));
  const HeisElem g = elem(p, {1, 2}, 1);
  EXPECT_EQ(power(p, g, 1), g);
  EXPECT_EQ(power(p, g, 0), identity(p));
  EXPECT_EQ(power(p, g, -1), inverse(p, g));

  const Params e = make_params(3, 2);
  EXPECT_EQ(power(e, gen_x(e, 2), 2), gen_z(e));
}

TEST(ElementOrder, Examples) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(element_order(p, gen_z(p)), 3u);
  EXPECT_EQ(element_order(p, identity(p)), 1u);
  EXPECT_EQ(element_order(make_params(3, 2), gen_x(make_params(3, 2), 2)), 4u);
}

TEST(ElementOrder, ZAndMiddleGenerator) {
  for (const auto& [k, m] : props::heisenberg_instances()) {
    const Params p = make_params(k, m);
    EXPECT_EQ(element_order(p, gen_z(p)), static_cast<std::uint64_t>(m));
    const std::uint64_t expected = m % 2 == 0 ? 2 * m : m;
    EXPECT_EQ(element_order(p, gen_x(p, p.n + 1)), expected) << "k=" << k << " m=" << m;
  }
}

TEST(AutoT, Examples) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(auto_t(p, gen_z(p)), gen_z(p));
  EXPECT_EQ(auto_t(p, identity(p)), identity(p));
  // x_1^{-1} x_2^{-1} = x_1^2 x_2^2: moving x_2 past x_1 does not occur.
  EXPECT_EQ(auto_t(p, elem(p, {1, 1}, 0)), elem(p, {2, 2}, 0));
  EXPECT_EQ(auto_t(p, elem(p, {1, 1}, 0)),
            multiply(p, inverse(p, gen_x(p, 1)), inverse(p, gen_x(p, 2))));
}

TEST(AutoB, Examples) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(auto_b(p, gen_x(p, 1)), gen_x(p, 2));
  EXPECT_EQ(auto_b(p, gen_z(p)), gen_z(p));
  EXPECT_EQ(auto_b(p, gen_x(p, 2)), elem(p, {2, 2}, 0));
  EXPECT_EQ(auto_b(p, elem(p, {2, 2}, 0)), gen_x(p, 1));
}

TEST(AutoB, GeneratorImagesFollowRule) {
  const Params p = make_params(7, 3);
  const HeisMorphism b = HeisMorphism::b(p);
  const auto& images = b.generator_images();
  ASSERT_EQ(images.size(), 6u);
  EXPECT_EQ(images[0], multiply(p, gen_x(p, 2), gen_x(p, 4)));
  EXPECT_EQ(images[1], multiply(p, gen_x(p, 3), gen_x(p, 4)));
  EXPECT_EQ(images[2], gen_x(p, 4));
  EXPECT_EQ(images[4], gen_x(p, 6));
  HeisElem last = inverse(p, gen_x(p, 1));
  for (int i = 4; i <= 6; ++i) last = multiply(p, last, inverse(p, gen_x(p, i)));
  EXPECT_EQ(images[5], last);
}

TEST(Commutator, Examples) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(commutator(p, gen_x(p, 1), gen_x(p, 2)), elem(p, {0, 0}, 1));
  const HeisElem g = elem(p, {2, 1}, 2);
  EXPECT_EQ(commutator(p, g, g), identity(p));
  EXPECT_EQ(commutator(p, gen_z(p), gen_x(p, 1)), identity(p));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_elements(make_params(3, 3)).size(), 27u);
  EXPECT_EQ(enumerate_elements(make_params(3, 2)).size(), 8u);
  EXPECT_EQ(enumerate_elements(make_params(5, 2)).size(), 32u);
  EXPECT_EQ(enumerate_elements(make_params(3, 3)).front(), identity(make_params(3, 3)));
}

TEST(Enumerate, BudgetExceeded) {
  try {
    enumerate_elements(make_params(7, 5), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(MakeElem, ReducesNegativeExponents) {
  const Params p = make_params(3, 3);
  EXPECT_EQ(make_elem(p, {-1, 0}, 0), inverse(p, gen_x(p, 1)));
  EXPECT_EQ(make_elem(p, {0, 0}, -1), inverse(p, gen_z(p)));
  // kind E: x_1^{-1} = x_1 z
  const Params e = make_params(3, 2);
  EXPECT_EQ(make_elem(e, {-1, 0}, 0), elem(e, {1, 0}, 1));
}

TEST(StructureReport, Examples) {
  const StructureReport r33 = structure_report(make_params(3, 3));
  EXPECT_EQ(r33.group_order, 27u);
  EXPECT_EQ(r33.center_order, 3u);
  EXPECT_EQ(r33.derived_order, 3u);
  EXPECT_EQ(r33.z_order, 3u);
  EXPECT_TRUE(r33.central_quotient_elementary_abelian);

  // quaternion group of order 8
  const StructureReport r32 = structure_report(make_params(3, 2));
  EXPECT_EQ(r32.group_order, 8u);
  EXPECT_EQ(r32.center_order, 2u);
  EXPECT_EQ(r32.derived_order, 2u);
  EXPECT_EQ(r32.z_order, 2u);

  const StructureReport r53 = structure_report(make_params(5, 3));
  EXPECT_EQ(r53.group_order, 243u);
  EXPECT_EQ(r53.center_order, 3u);
}

TEST(StructureReport, OddPrimeMIsExtraspecial) {
  for (int k : {3, 5}) {
    for (int m : {3, 5}) {
      const StructureReport r = structure_report(make_params(k, m));
      EXPECT_EQ(r.center_order, static_cast<std::uint64_t>(m));
      EXPECT_EQ(r.derived_order, static_cast<std::uint64_t>(m));
      EXPECT_TRUE(r.central_quotient_elementary_abelian);
    }
  }
}

class HeisenbergProperties : public ::testing::TestWithParam<props::Instance> {};

TEST_P(HeisenbergProperties, Relations) {
  const auto r = props::relation_suite(make_params(GetParam().k, GetParam().m));
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST_P(HeisenbergProperties, Associativity) {
  const auto r = props::associativity_suite(make_params(GetParam().k, GetParam().m));
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST_P(HeisenbergProperties, AgreesWithWordRewriting) {
  const auto r = props::oracle_product_suite(make_params(GetParam().k, GetParam().m));
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST_P(HeisenbergProperties, TIsAnInvolutiveAutomorphism) {
  const auto r = props::hom_t_suite(make_params(GetParam().k, GetParam().m));
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST_P(HeisenbergProperties, BIsAnAutomorphismOfOrderK) {
  const auto r = props::hom_b_suite(make_params(GetParam().k, GetParam().m));
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST_P(HeisenbergProperties, KernelIsPreserved) {
  const auto r = props::quotient_soundness_suite(make_params(GetParam().k, GetParam().m));
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST_P(HeisenbergProperties, StructureOrders) {
  const Params p = make_params(GetParam().k, GetParam().m);
  const StructureReport r = structure_report(p);
  EXPECT_EQ(r.group_order, group_order(p));
  EXPECT_EQ(r.z_order, static_cast<std::uint64_t>(p.m));
  EXPECT_EQ(r.center_order % p.m, 0u);
}

INSTANTIATE_TEST_SUITE_P(Instances, HeisenbergProperties,
                         ::testing::ValuesIn(props::heisenberg_instances()),
                         [](const auto& info) {
                           return "k" + std::to_string(info.param.k) + "_m" +
                                  std::to_string(info.param.m);
                         });

// The alternative reading v_1 = 1 for even n (0 for odd n) does not give a
// subgroup preserved by b.
TEST(VVector, FlippedFirstEntryBreaksB) {
  const int k = 5;
  const int m = 2;
  const int n = 2;
  const oracle::WordGroup words(k, m, oracle::flipped_v1(n));
  oracle::Word x1m(m, oracle::Letter{0, +1});
  for (int r = 0; r < words.v()[0] * m / 2; ++r) x1m.push_back({2 * n, +1});
  const oracle::Normal one{std::vector<int>(2 * n, 0), 0};
  EXPECT_EQ(words.reduce(x1m), one);
  bool some_kernel_word_escapes = false;
  for (int i = 0; i < 2 * n; ++i) {
    oracle::Word w(m, oracle::Letter{i, +1});
    for (int r = 0; r < words.v()[i] * m / 2; ++r) w.push_back({2 * n, +1});
    some_kernel_word_escapes |= words.reduce(words.image_b(w)) != one;
  }
  EXPECT_TRUE(some_kernel_word_escapes);

  Params p = make_params(k, m);
  p.v = oracle::flipped_v1(n);
  EXPECT_FALSE(props::hom_b_suite(p).ok);
}

}  // namespace
}  // namespace heiscay
