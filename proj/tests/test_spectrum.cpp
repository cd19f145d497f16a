#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <random>

#include "support.hpp"

using namespace cyclo;
using cyclo::testing::random_digraph;

namespace {

Eigen::VectorXd numeric_eigenvalues(const HermMatrix& h) {
  const int n = h.size();
  Eigen::MatrixXcd m(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      m(x, y) = std::complex<double>(h(x, y).re().convert_to<double>(), h(x, y).im().convert_to<double>());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

Digraph ctilde4() { return small_family(CatalogRef::ctilde(4)); }

}  // namespace

TEST(CharPoly, SmallExamples) {
  EXPECT_EQ(char_poly(HermMatrix(0)), IntPoly{1});
  EXPECT_EQ(char_poly(Digraph(1).hermitian_adjacency()), (IntPoly{0, 1}));
  Digraph k2(2);
  k2.add_arc(0, 1);
  EXPECT_EQ(char_poly(k2.hermitian_adjacency()), (IntPoly{-1, 0, 1}));
  // all-digon triangle: x^3 - 3x - 2
  Digraph c3(3);
  c3.add_digon(0, 1);
  c3.add_digon(1, 2);
  c3.add_digon(0, 2);
  EXPECT_EQ(char_poly(c3.hermitian_adjacency()), (IntPoly{-2, -3, 0, 1}));
}

TEST(CharPoly, MatchesLeverrierOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const HermMatrix h = random_digraph(rng, n).hermitian_adjacency();
    ASSERT_EQ(char_poly(h), cyclo::testing::leverrier_char_poly(h)) << h.to_string();
  }
}

TEST(CharPoly, RootsMatchEigenSolver) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const HermMatrix h = random_digraph(rng, n).hermitian_adjacency();
    const IntPoly p = char_poly(h);
    for (double lambda : numeric_eigenvalues(h)) {
      // p(lambda) evaluated numerically, scaled by the size of its terms
      double v = 0, scale = 0;
      for (int k = p.degree(); k >= 0; --k) {
        v = v * lambda + p.coeff(k).convert_to<double>();
        scale = scale * std::abs(lambda) + std::abs(p.coeff(k).convert_to<double>());
      }
      EXPECT_LE(std::abs(v), 1e-8 * std::max(1.0, scale));
    }
  }
}

TEST(RadiusClass, AgreesWithNumericRadiusAwayFromTheBoundary) {
  std::mt19937_64 rng(23);
  int compared = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const HermMatrix h = random_digraph(rng, n, 0.35).hermitian_adjacency();
    const auto ev = numeric_eigenvalues(h);
    const double rho = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
    const RadiusClass r = radius_class(h);
    if (std::abs(rho - 2) < 1e-7) {
      EXPECT_EQ(r, RadiusClass::Exactly2);
      continue;
    }
    ++compared;
    EXPECT_EQ(r, rho < 2 ? RadiusClass::LessThan2 : RadiusClass::GreaterThan2) << h.to_string();
  }
  EXPECT_GT(compared, 300);
}

TEST(RadiusClass, SpecExamples) {
  Digraph p3(3);
  p3.add_digon(0, 1);
  p3.add_digon(1, 2);
  EXPECT_EQ(radius_class(p3.hermitian_adjacency()), RadiusClass::LessThan2);
  Digraph c4(4);
  for (int x = 0; x < 4; ++x) c4.add_digon(x, (x + 1) % 4);
  EXPECT_EQ(radius_class(c4.hermitian_adjacency()), RadiusClass::Exactly2);
  const auto k4 = small_family(CatalogRef::complete(4));
  EXPECT_EQ(radius_class(k4.hermitian_adjacency()), RadiusClass::GreaterThan2);
}

TEST(RadiusClass, InvariantUnderSwitchingAndConverse) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const HermMatrix h = random_digraph(rng, n).hermitian_adjacency();
    const auto w = cyclo::testing::random_witness(rng, n, true);
    EXPECT_EQ(char_poly(apply(w, h)), w.negated ? char_poly(h.negated()) : char_poly(h));
    EXPECT_EQ(radius_class(apply(w, h)), radius_class(h));
  }
}

TEST(RadiusClass, MonotoneUnderPrincipalSubmatrices) {
  std::mt19937_64 rng(25);
  auto rank_of = [](RadiusClass r) { return static_cast<int>(r); };
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const HermMatrix h = random_digraph(rng, n).hermitian_adjacency();
    std::vector<int> keep;
    for (int x = 0; x < n; ++x)
      if (rng() % 2) keep.push_back(x);
    EXPECT_LE(rank_of(radius_class(h.principal_submatrix(keep))), rank_of(radius_class(h)));
  }
}

TEST(MinEigen, BoundaryCaseIsExcludedByStrictness) {
  const HermMatrix h = ctilde4().hermitian_adjacency();
  // C~4 has least eigenvalue exactly -sqrt 2
  EXPECT_EQ(cyclo::count_roots_in(char_poly(h), Bound::at(QuadRational::sqrt2(-1)),
                                  Bound::at(QuadRational::sqrt2(-1)), true, true),
            1);
  EXPECT_FALSE(min_eigen_exceeds(h));
  EXPECT_TRUE(min_eigen_exceeds(small_family(CatalogRef::complete(4)).hermitian_adjacency()));
  EXPECT_TRUE(min_eigen_exceeds(HermMatrix(0)));
}

TEST(MinEigen, AgreesWithEigenSolver) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const HermMatrix h = random_digraph(rng, n).hermitian_adjacency();
    const double lo = numeric_eigenvalues(h).minCoeff();
    if (std::abs(lo + std::sqrt(2.0)) < 1e-7) continue;
    EXPECT_EQ(min_eigen_exceeds(h), lo > -std::sqrt(2.0));
  }
}

TEST(Rank, ExactEliminationMatchesNumericRank) {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const HermMatrix h = random_digraph(rng, n).hermitian_adjacency().shifted(2);
    const auto ev = numeric_eigenvalues(h);
    int numeric = 0;
    for (double v : ev) numeric += std::abs(v) > 1e-8;
    EXPECT_EQ(rank(h), numeric);
  }
  EXPECT_EQ(rank(HermMatrix(3)), 0);
}

TEST(DisplacedRank, FlagsTheLatticePrecondition) {
  EXPECT_TRUE(displaced_rank(ctilde4().hermitian_adjacency()).precondition_met);
  const auto k5 = displaced_rank(small_family(CatalogRef::complete(5)).hermitian_adjacency());
  EXPECT_FALSE(k5.precondition_met);
}
