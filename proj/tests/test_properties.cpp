#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace {

class Properties : public ::testing::TestWithParam<unsigned> {};

}  // namespace

TEST_P(Properties, DeltaParityAndMass) {
  const auto f = apn::Field::make(GetParam());
  for (const auto& F : props::sample_functions(f, GetParam())) EXPECT_EQ(props::delta_parity_and_mass(F), "");
}

TEST_P(Properties, Parseval) {
  const auto f = apn::Field::make(GetParam());
  for (const auto& F : props::sample_functions(f, GetParam())) EXPECT_EQ(props::parseval(F), "");
}

TEST_P(Properties, FwhtMatchesNaive) {
  if (GetParam() > 5) GTEST_SKIP();
  const auto f = apn::Field::make(GetParam());
  for (const auto& F : props::sample_functions(f, GetParam())) EXPECT_EQ(props::fwht_matches_naive(F), "");
}

TEST_P(Properties, AnfRoundTrip) {
  const auto f = apn::Field::make(GetParam());
  for (const auto& F : props::sample_functions(f, GetParam())) EXPECT_EQ(props::anf_round_trip(F), "");
}

TEST_P(Properties, AffineInvariance) {
  const auto f = apn::Field::make(GetParam());
  for (const auto& F : props::sample_functions(f, GetParam())) EXPECT_EQ(props::affine_invariance(F, 20, 101), "");
}

TEST_P(Properties, AutomorphismInvariance) {
  const auto f = apn::Field::make(GetParam());
  for (const auto& F : props::sample_functions(f, GetParam())) {
    EXPECT_EQ(props::automorphism_invariance(F, 20, 202), "");
  }
}

TEST_P(Properties, BasisIndependence) {
  const unsigned m = GetParam();
  for (std::uint64_t d : {3ULL, 5ULL, 7ULL, 11ULL, (1ULL << m) - 2}) EXPECT_EQ(props::basis_independence(m, d), "");
}

INSTANTIATE_TEST_SUITE_P(SmallFields, Properties, ::testing::Values(4U, 5U, 6U));

TEST(PropertiesLarge, ParityAndParsevalAtM8) {
  const auto f = apn::Field::make(8);
  for (const auto& F : props::sample_functions(f, 8)) {
    EXPECT_EQ(props::delta_parity_and_mass(F), "");
    EXPECT_EQ(props::parseval(F), "");
  }
}

TEST(PropertiesLarge, AbImpliesApn) {
  for (unsigned m : {3U, 5U, 7U}) {
    const auto f = apn::Field::make(m);
    for (std::uint64_t d = 1; d < f->group_order(); ++d) {
      const auto F = apn::VectorialFunction::power(f, d);
      if (apn::is_ab(F)) {
        EXPECT_TRUE(apn::is_apn(F)) << m << ' ' << d;
      }
    }
  }
}
