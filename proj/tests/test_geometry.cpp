#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "json.hpp"
#include "tgw/error.hpp"
#include "tgw/fixtures.hpp"
#include "tgw/geometry.hpp"

using namespace tgw;

namespace {

Matrix random_symmetric(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a(i, j) = a(j, i) = d(rng);
  return a;
}

}  // namespace

TEST(Jacobi, Diagonal) {
  Matrix a(3, 3);
  a(0, 0) = 1;
  a(1, 1) = 3;
  a(2, 2) = 2;
  const auto e = jacobi_eigen(a);
  EXPECT_EQ(e.values, (std::vector<double>{3, 2, 1}));
  EXPECT_TRUE(e.converged);
}

TEST(Jacobi, TwoByTwoClosedForm) {
  Matrix a(2, 2, 0.25);
  const auto e = jacobi_eigen(a);
  EXPECT_NEAR(e.values[0], 0.5, 1e-12);
  EXPECT_NEAR(e.values[1], 0.0, 1e-12);
  EXPECT_NEAR(e.vectors(0, 0), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(e.vectors(1, 0), std::sqrt(0.5), 1e-12);
}

TEST(Jacobi, AgreesWithEigenOnRandomMatrices) {
  std::mt19937 rng(4242);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix a = random_symmetric(n, rng);
      const auto e = jacobi_eigen(a);
      ASSERT_TRUE(e.converged);
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m);
      for (int i = 0; i < n; ++i) EXPECT_NEAR(e.values[i], ref.eigenvalues()(n - 1 - i), 1e-10);
      for (int i = 0; i < n; ++i) {
        double dot = 0;
        for (int r = 0; r < n; ++r) dot += e.vectors(r, i) * ref.eigenvectors()(r, n - 1 - i);
        EXPECT_NEAR(std::abs(dot), 1.0, 1e-8);
      }
      EXPECT_LE(max_abs_difference(reconstruct(e), a), 1e-9);
      EXPECT_LE(orthonormality_error(e.vectors), 1e-9);
    }
}

TEST(Jacobi, SignConvention) {
  std::mt19937 rng(5);
  const auto e = jacobi_eigen(random_symmetric(5, rng));
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 5; ++i)
      if (std::abs(e.vectors(i, j)) > 1e-12) {
        EXPECT_GT(e.vectors(i, j), 0);
        break;
      }
}

TEST(Metric, SurvivorsGiveZero) {
  const auto s = bundled_structure("B2xB2");
  const auto sp = spectrum(*s);
  const auto m = metric_matrix(*s, sp, default_valuation(*s));
  // brute force over parameters and elements outside both primes
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      const Subset u = sp.points[p].members | sp.points[q].members;
      double best = -1;
      for (int g = 0; g < s->gamma_count(); ++g)
        for (int a = 0; a < s->size(); ++a)
          for (int b = 0; b < s->size(); ++b) {
            if (contains(u, a) || contains(u, b)) continue;
            const double v = std::abs(static_cast<double>(a - b));
            if (best < 0 || v < best) best = v;
          }
      EXPECT_DOUBLE_EQ(m.distance(p, q), best < 0 ? m.max_distance : best);
    }
  EXPECT_TRUE(m.capped_pairs.empty());
}

TEST(Metric, CustomValuation) {
  const auto s = bundled_structure("B2xB2");
  const auto nu = load_valuation(R"({"g0":[0,1,2,3],"g1":[0,1,2,3]})", *s);
  EXPECT_EQ(nu(1, 3), 3.0);
  EXPECT_THROW(load_valuation(R"({"g0":[0,1,2,3]})", *s), Error);
  EXPECT_THROW(load_valuation(R"({"g0":[0,1],"g1":[0,1,2,3]})", *s), Error);
}

TEST(Weights, DefaultAndClosedSets) {
  const auto s = bundled_structure("B2xB2");
  const auto sp = spectrum(*s);
  const auto w = fuzzy_weights(*s, sp);
  EXPECT_EQ(w.weights, (std::vector<double>{0.5, 0.5}));
  EXPECT_TRUE(w.monotone);
  ASSERT_EQ(w.closed_weights.size(), sp.ideals.size());
  for (std::size_t i = 0; i < sp.ideals.size(); ++i) {
    double sup = 0;
    for (int p : members(sp.closed_sets[i])) sup = std::max(sup, w.weights[p]);
    EXPECT_EQ(w.closed_weights[i], sup);
  }
}

TEST(Weights, FileTable) {
  EXPECT_EQ(load_weights("[0.25, 1]", 2), (std::vector<double>{0.25, 1.0}));
  EXPECT_THROW(load_weights("[0.25]", 2), Error);
  EXPECT_THROW(load_weights("[1.5, 0]", 2), Error);
  const auto s = bundled_structure("B2xB2");
  const auto w = fuzzy_weights(*s, spectrum(*s), std::vector<double>{0.25, 1.0});
  EXPECT_EQ(w.weights, (std::vector<double>{0.25, 1.0}));
}

TEST(Embed, ProductClosedForm) {
  const auto g = embed(*bundled_structure("B2xB2"), 2);
  ASSERT_EQ(g.eigen.values.size(), 2u);
  EXPECT_NEAR(g.eigen.values[0], 0.5, 1e-12);
  EXPECT_NEAR(g.eigen.values[1], 0.0, 1e-12);
  EXPECT_LE(g.reconstruction_error, 1e-9);
  EXPECT_LE(g.orthonormality, 1e-9);
  EXPECT_EQ(g.coordinates.rows, 2);
  EXPECT_EQ(g.coordinates.cols, 2);
  EXPECT_NEAR(g.coordinates(0, 0), std::sqrt(0.5), 1e-12);
}

TEST(Embed, ClampsK) {
  const auto g = embed(*bundled_structure("B2"), 3);
  EXPECT_EQ(g.k, 1);
  EXPECT_FALSE(g.warnings.empty());
  EXPECT_THROW(embed(*bundled_structure("B2"), 0), Error);
}

TEST(Export, Formats) {
  const auto g = embed(*bundled_structure("B2xB2"), 1);
  const auto dot = export_graph(g, GraphFormat::dot);
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("0.250000"), std::string::npos);
  const auto csv = export_graph(g, GraphFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "label,weight,x1");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  const auto j = nlohmann::json::parse(export_graph(g, GraphFormat::json));
  EXPECT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(parse_graph_format("dot"), GraphFormat::dot);
  EXPECT_THROW(parse_graph_format("svg"), Error);
}
