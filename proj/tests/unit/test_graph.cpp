#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ecfs/graph.hpp"
#include "ecfs/synthetic.hpp"
#include "oracles.hpp"

using namespace ecfs;

namespace {

Dataset random_dataset(std::size_t t, std::size_t n, int classes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix x(t, n);
  std::vector<int> y(t);
  for (std::size_t r = 0; r < t; ++r) {
    y[r] = static_cast<int>(r % classes);
    for (std::size_t c = 0; c < n; ++c) x(r, c) = g(rng) + 0.7 * y[r] * static_cast<double>(c % 3);
  }
  return Dataset(std::move(x), std::move(y));
}

Dataset permuted_rows(const Dataset& d, std::uint64_t seed) {
  std::vector<std::size_t> rows(d.samples());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(rows.begin(), rows.end(), rng);
  return d.subset(rows);
}

}  // namespace

TEST(Fisher, ZeroWhenClassMeansCoincide) {
  Dataset d(Matrix::from_rows({{1}, {3}, {3}, {1}}), {0, 0, 1, 1});
  EXPECT_EQ(fisher_scores(d).values[0], 0.0);
}

TEST(Fisher, BinaryHandSubstitution) {
  // Class 1: mean 1, variance 0.5. Class 0: mean 0, variance 0.5.
  const double a = std::sqrt(0.5);
  Dataset d(Matrix::from_rows({{-a}, {a}, {1 - a}, {1 + a}}), {0, 0, 1, 1});
  EXPECT_NEAR(fisher_scores(d).values[0], 1.0, 1e-12);
}

TEST(Fisher, MulticlassMatchesStraightLineOracle) {
  // Per-class means {0, 1, 2}, equal sizes, population variance 0.5 each.
  const double a = std::sqrt(0.5);
  Matrix x(6, 1);
  std::vector<int> y(6);
  for (int c = 0; c < 3; ++c) {
    x(2 * c, 0) = c - a;
    x(2 * c + 1, 0) = c + a;
    y[2 * c] = y[2 * c + 1] = c;
  }
  Dataset d(x, y);
  const double expected = oracle::multiclass_fisher(x.column(0), y, 3);
  EXPECT_NEAR(expected, 2.0 / 1.5, 1e-12);
  EXPECT_NEAR(fisher_scores(d).values[0], expected, 1e-12);

  const auto rd = random_dataset(45, 7, 3, 17);
  const auto f = fisher_scores(rd).values;
  const std::vector<int> ry(rd.y().begin(), rd.y().end());
  for (std::size_t j = 0; j < 7; ++j)
    EXPECT_NEAR(f[j], oracle::multiclass_fisher(rd.x().column(j), ry, 3), 1e-12 * (1 + f[j]));
}

TEST(Fisher, ZeroVarianceDenominator) {
  Dataset constant(Matrix::from_rows({{2}, {2}, {2}, {2}}), {0, 0, 1, 1});
  EXPECT_EQ(fisher_scores(constant).values[0], 0.0);
  Dataset separated(Matrix::from_rows({{0}, {0}, {1}, {1}}), {0, 0, 1, 1});
  EXPECT_DOUBLE_EQ(fisher_scores(separated).values[0], 1.0 / kFisherEpsilon);
}

TEST(Fisher, InvariantUnderRowPermutationShiftAndScale) {
  const auto d = random_dataset(40, 9, 2, 3);
  const auto base = fisher_scores(d).values;
  const auto perm = fisher_scores(permuted_rows(d, 8)).values;
  for (std::size_t j = 0; j < base.size(); ++j) EXPECT_NEAR(perm[j], base[j], 1e-12 * (1 + base[j]));

  Matrix shifted = d.x(), pow2 = d.x(), scaled = d.x();
  for (std::size_t r = 0; r < shifted.rows(); ++r)
    for (std::size_t c = 0; c < shifted.cols(); ++c) {
      shifted(r, c) += 17.25;
      pow2(r, c) *= 0.25;
      scaled(r, c) *= 3.7;
    }
  const auto fs = fisher_scores(d.with_values(shifted)).values;
  const auto f2 = fisher_scores(d.with_values(pow2)).values;
  const auto fc = fisher_scores(d.with_values(scaled)).values;
  for (std::size_t j = 0; j < base.size(); ++j) {
    EXPECT_NEAR(fs[j], base[j], 1e-9 * (1 + base[j]));
    EXPECT_EQ(f2[j], base[j]);  // power-of-two scaling is exact in binary floating point
    EXPECT_NEAR(fc[j], base[j], 1e-12 * (1 + base[j]));
  }
}

TEST(MutualInformation, ConstantFeatureIsZero) {
  Dataset d(Matrix::from_rows({{4}, {4}, {4}, {4}}), {0, 1, 0, 1});
  EXPECT_EQ(mutual_information_scores(d, 2).values[0], 0.0);
}

TEST(MutualInformation, PerfectBinaryPredictorIsLn2) {
  Dataset d(Matrix::from_rows({{0}, {1}, {0}, {1}, {1}, {0}}), {0, 1, 0, 1, 1, 0});
  EXPECT_NEAR(mutual_information_scores(d, 2).values[0], std::log(2.0), 1e-12);
}

TEST(MutualInformation, IndependentFeatureNearZero) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix x(1000, 1);
  std::vector<int> y(1000);
  for (int i = 0; i < 1000; ++i) {
    x(i, 0) = g(rng);
    y[i] = static_cast<int>(rng() % 2);
  }
  const double mi = mutual_information_scores(Dataset(x, y), 10).values[0];
  EXPECT_GE(mi, 0.0);
  EXPECT_LT(mi, 0.05);
}

TEST(MutualInformation, RejectsSingleBin) {
  Dataset d(Matrix::from_rows({{0}, {1}}), {0, 1});
  EXPECT_THROW(mutual_information_scores(d, 1), std::invalid_argument);
}

TEST(MutualInformation, NonnegativeAndRowPermutationInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_dataset(30 + seed, 6, 2 + static_cast<int>(seed % 3), seed);
    const auto base = mutual_information_scores(d, 5).values;
    const auto perm = mutual_information_scores(permuted_rows(d, seed + 100), 5).values;
    for (std::size_t j = 0; j < base.size(); ++j) {
      EXPECT_GE(base[j], 0.0);
      EXPECT_NEAR(perm[j], base[j], 1e-12);
    }
  }
}

TEST(MutualInformation, DefaultBins) {
  EXPECT_EQ(default_bins(2), 2);
  EXPECT_EQ(default_bins(62), 7);
  EXPECT_EQ(default_bins(200), 14);
}

TEST(Sigma, ConstantFeaturesGiveZeroMatrix) {
  Dataset d(Matrix::from_rows({{1, 3}, {1, 3}, {1, 3}}), {0, 1, 1});
  const auto s = sigma_matrix(d);
  for (double v : s.values()) EXPECT_EQ(v, 0.0);
}

TEST(Sigma, MaxRuleAndSymmetry) {
  const auto s = sigma_matrix(Vector{0.1, 0.3, 0.2});
  EXPECT_EQ(s(0, 1), 0.3);
  EXPECT_EQ(s(1, 0), 0.3);
  EXPECT_EQ(s(0, 2), 0.2);
  EXPECT_EQ(s(0, 0), 0.1);

  const auto d = random_dataset(25, 10, 2, 5);
  const auto sn = sigma_matrix(Dataset(d));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(sn(i, j), sn(j, i));
}

TEST(Sigma, EntriesInUnitIntervalOnNormalizedData) {
  const auto inputs = compute_graph_inputs(random_dataset(50, 20, 2, 9), 7);
  for (double v : sigma_matrix(inputs.feature_sd).values()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Adjacency, BlendBoundaries) {
  const ScoreVector f{{0.2, 3.0, 1.0}, ScoreKind::fisher};
  const ScoreVector m{{0.5, 0.1, 0.9}, ScoreKind::mutual_information};
  const auto sigma = sigma_matrix(Vector{0.1, 0.05, 0.2});
  const auto fs = rescale_unit(f.values), ms = rescale_unit(m.values);

  const auto k = build_adjacency(f, m, sigma, 1.0).a;
  const auto s = build_adjacency(f, m, sigma, 0.0).a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(k(i, j), fs[i] * ms[j]);
      EXPECT_EQ(s(i, j), sigma(i, j));
    }
}

TEST(Adjacency, HandComputedBlend) {
  const ScoreVector f{{0.0, 1.0}, ScoreKind::fisher};
  const ScoreVector m{{1.0, 0.0}, ScoreKind::mutual_information};
  const Matrix sigma = Matrix::from_rows({{0.2, 0.5}, {0.5, 0.4}});
  const auto a = build_adjacency(f, m, sigma, 0.5).a;
  EXPECT_NEAR(a(0, 0), 0.1, 1e-15);
  EXPECT_NEAR(a(0, 1), 0.25, 1e-15);
  EXPECT_NEAR(a(1, 0), 0.75, 1e-15);
  EXPECT_NEAR(a(1, 1), 0.2, 1e-15);
}

TEST(Adjacency, ImplicitSigmaMatchesExplicitMatrix) {
  const auto inputs = compute_graph_inputs(random_dataset(40, 12, 3, 8), 6);
  const Matrix sigma = sigma_matrix(inputs.feature_sd);
  for (double alpha : {0.0, 0.3, 1.0})
    EXPECT_EQ(build_adjacency(inputs.fisher, inputs.mi, inputs.feature_sd, alpha).a,
              build_adjacency(inputs.fisher, inputs.mi, sigma, alpha).a);
}

TEST(Adjacency, LinearInAlphaAndWithinUnitInterval) {
  const auto inputs = compute_graph_inputs(random_dataset(60, 15, 2, 21), 7);
  const auto k = build_adjacency(inputs.fisher, inputs.mi, inputs.feature_sd, 1.0).a;
  const auto s = build_adjacency(inputs.fisher, inputs.mi, inputs.feature_sd, 0.0).a;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double alpha = u(rng);
    const auto a = build_adjacency(inputs.fisher, inputs.mi, inputs.feature_sd, alpha).a;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
      const double v = a.values()[i];
      EXPECT_NEAR(v, alpha * k.values()[i] + (1 - alpha) * s.values()[i], 1e-12);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      EXPECT_TRUE(std::isfinite(v));
    }
  }
}

TEST(Adjacency, RejectsAlphaOutsideUnitInterval) {
  const ScoreVector f{{1.0}, ScoreKind::fisher}, m{{1.0}, ScoreKind::mutual_information};
  const Matrix sigma(1, 1);
  EXPECT_THROW(build_adjacency(f, m, sigma, 1.5), std::invalid_argument);
  EXPECT_THROW(build_adjacency(f, m, sigma, -0.1), std::invalid_argument);
}

TEST(Adjacency, ConstantScoreVectorsFlagged) {
  const ScoreVector f{{2.0, 2.0}, ScoreKind::fisher}, m{{0.0, 1.0}, ScoreKind::mutual_information};
  const auto a = build_adjacency(f, m, Matrix(2, 2), 0.5);
  EXPECT_TRUE(a.fisher_constant);
  EXPECT_FALSE(a.mi_constant);
  EXPECT_EQ(rescale_unit({3.0, 1.0, 2.0}), (Vector{1.0, 0.0, 0.5}));
}

TEST(Adjacency, NonnegativeFiniteForArbitraryData) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto synth = generate_synthetic({30, 25, 4, 1.0 + seed, 0.5, seed});
    const auto inputs = compute_graph_inputs(synth.data, default_bins(30));
    const auto a = build_adjacency(inputs.fisher, inputs.mi, inputs.feature_sd, 0.1 * seed).a;
    for (double v : a.values()) {
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
    }
  }
}
