#include <gtest/gtest.h>

#include <random>

#include "apn/catalog.hpp"
#include "apn/error.hpp"
#include "apn/spectra.hpp"
#include "oracles.hpp"

using namespace apn;

namespace {

std::vector<std::uint32_t> lut_of(const VectorialFunction& f) { return {f.lut().begin(), f.lut().end()}; }

VectorialFunction random_function(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Element> lut(f->size());
  for (auto& v : lut) v = rng() % f->size();
  return VectorialFunction(f, lut);
}

}  // namespace

TEST(Differential, HistogramMatchesNaiveCounterM4) {
  const FieldPtr f = Field::make(4);
  std::mt19937_64 rng(2);
  for (const auto& F : {VectorialFunction::power(f, 3), VectorialFunction::power(f, 7), random_function(f, rng)}) {
    const auto lut = lut_of(F);
    std::map<std::uint32_t, std::uint64_t> want;
    std::uint32_t max = 0;
    for (Element a = 0; a < 16; ++a) {
      for (Element b = 0; b < 16; ++b) {
        if (a == 0 && b == 0) continue;
        const auto d = oracle::delta(lut, a, b);
        ++want[d];
        max = std::max(max, d);
      }
    }
    const auto ds = differential_spectrum(F);
    EXPECT_EQ(ds.histogram, want);
    EXPECT_EQ(ds.uniformity, max);
    EXPECT_EQ(is_apn(F), max == 2);
  }
}

TEST(Differential, LinearMaps) {
  const FieldPtr f = Field::make(6);
  const auto sq = VectorialFunction::power(f, 2);
  const auto ds = differential_spectrum(sq);
  for (const auto& [v, n] : ds.histogram) EXPECT_TRUE(v == 0 || v == 64) << v;
  EXPECT_FALSE(is_apn(sq));
  EXPECT_EQ(ds.uniformity, 64U);
}

TEST(Differential, GoldAtM10) {
  const FieldPtr f = Field::make(10);
  EXPECT_EQ(differential_spectrum(VectorialFunction::power(f, 3)).uniformity, 2U);
  EXPECT_FALSE(is_apn(theorem1_function(f, 1)));
  const Element w = order3_element(*f);
  EXPECT_TRUE(is_apn(theorem1_function(f, f->mul(w, f->exp(33 * 4)))));
}

TEST(Differential, JobsDoNotChangeTheResult) {
  const FieldPtr f = Field::make(9);
  std::mt19937_64 rng(4);
  const auto F = random_function(f, rng);
  EXPECT_EQ(differential_spectrum(F, 1), differential_spectrum(F, 3));
  EXPECT_EQ(walsh_spectrum(F, 1), walsh_spectrum(F, 4));
  const auto G = VectorialFunction::power(f, 5);
  EXPECT_EQ(is_apn(G, 1), is_apn(G, 3));
}

TEST(Walsh, FwhtMatchesNaiveCharacterSums) {
  std::mt19937_64 rng(8);
  for (unsigned m = 2; m <= 5; ++m) {
    const FieldPtr f = Field::make(m);
    for (const auto& F : {VectorialFunction::power(f, 3), random_function(f, rng)}) {
      const auto lut = lut_of(F);
      std::map<std::int64_t, std::uint64_t> want;
      for (Element beta = 0; beta < f->size(); ++beta) {
        const auto row = walsh_coefficients(F, beta);
        for (Element alpha = 0; alpha < f->size(); ++alpha) {
          const auto s = oracle::character_sum(lut, alpha, beta, f->polynomial(), m);
          ASSERT_EQ(row[alpha], s) << "m=" << m << " alpha=" << alpha << " beta=" << beta;
          ++want[s];
        }
      }
      EXPECT_EQ(walsh_spectrum(F).values, want);
    }
  }
}

TEST(Walsh, LinearFunctions) {
  const FieldPtr f = Field::make(6);
  const auto ws = walsh_spectrum(VectorialFunction::power(f, 4));
  for (const auto& [v, n] : ws.abs_values) EXPECT_TRUE(v == 0 || v == 64);
}

TEST(Walsh, AlmostBent) {
  EXPECT_TRUE(is_ab(VectorialFunction::power(Field::make(5), 3)));
  EXPECT_FALSE(is_ab(VectorialFunction::power(Field::make(5), 15)));
  const FieldPtr f10 = Field::make(10);
  EXPECT_FALSE(is_ab(VectorialFunction::power(f10, 3)));
  EXPECT_FALSE(is_ab(theorem1_function(f10, theorem1_valid_us(*f10).front())));
}

TEST(Crooked, Examples) {
  const FieldPtr f10 = Field::make(10);
  EXPECT_TRUE(is_crooked(theorem1_function(f10, theorem1_valid_us(*f10).back())));
  EXPECT_FALSE(is_crooked(VectorialFunction::power(f10, 339)));
  EXPECT_TRUE(is_crooked(VectorialFunction::power(Field::make(7), 5)));
  const FieldPtr f6 = Field::make(6);
  EXPECT_FALSE(is_crooked(VectorialFunction::power(f6, 1)));
  std::vector<Element> affine(64);
  for (Element x = 0; x < 64; ++x) affine[x] = f6->square(x) ^ 5U;
  EXPECT_FALSE(is_crooked(VectorialFunction(f6, affine)));
}

TEST(SpectraEqual, Examples) {
  const FieldPtr f = Field::make(10);
  const auto x3 = VectorialFunction::power(f, 3);
  EXPECT_TRUE(spectra_equal(x3, VectorialFunction::power(f, 57)));
  EXPECT_FALSE(spectra_equal(x3, VectorialFunction::power(f, 339)));
  std::mt19937_64 rng(12);
  const auto g = compose_with_linear(x3, LinearMap::random(10, rng), LinearMap::random(10, rng), 17, 99);
  EXPECT_TRUE(spectra_equal(x3, g));
  EXPECT_THROW(spectra_equal(x3, VectorialFunction::power(Field::make(9), 3)), FieldMismatch);
}
