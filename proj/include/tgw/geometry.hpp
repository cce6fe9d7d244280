#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgw/eigen.hpp"
#include "tgw/ideals.hpp"
#include "tgw/options.hpp"
#include "tgw/semiring.hpp"

namespace tgw {

/// nu[gamma][element], total over parameters x elements.
struct ValuationTable {
  std::vector<std::vector<double>> values;

  double operator()(int gamma, int element) const { return values[gamma][element]; }
};

// nu(gamma, a) = index of a.
ValuationTable default_valuation(const Semiring& s);
// JSON object: parameter label -> array of |T| reals. Every parameter must
// appear.
ValuationTable load_valuation(std::string_view text, const Semiring& s);

struct MetricResult {
  Matrix distance;
  double max_distance = 0;  // 1 + max |nu difference|, used for pairs without survivors
  std::vector<std::pair<int, int>> capped_pairs;
};

// d(P,Q) = min over gamma and a, b outside P u Q of |nu(gamma,a) - nu(gamma,b)|.
MetricResult metric_matrix(const Semiring& s, const SpectrumSpace& spec, const ValuationTable& nu);

struct WeightReport {
  std::vector<double> weights;         // mu(P)
  std::vector<double> closed_weights;  // mu(V(I)) for every ideal I of the lattice
  bool monotone = true;                // I inside J implies mu(V(J)) <= mu(V(I))
  std::vector<std::pair<int, int>> monotonicity_failures;  // ideal index pairs
};

// Default scheme mu(P) = 1 - |P|/|T| unless explicit per-point weights are
// given. mu(V(I)) is the sup over the points of V(I), 0 when V(I) is empty.
WeightReport fuzzy_weights(const Semiring& s, const SpectrumSpace& spec,
                           const std::optional<std::vector<double>>& table = std::nullopt);
// JSON array of reals in [0, 1], one per spectrum point.
std::vector<double> load_weights(std::string_view text, std::size_t points);

struct SpectrumGraph {
  std::vector<std::string> labels;  // rendered prime ideals
  std::vector<Subset> points;
  MetricResult metric;
  WeightReport weights;
  Matrix adjacency;
  EigenDecomposition eigen;
  int k = 0;
  Matrix coordinates;  // points x k
  double reconstruction_error = 0;
  double orthonormality = 0;
  std::vector<std::string> warnings;
  bool lenient = false;
};

SpectrumGraph embed(const Semiring& s, int k, const std::optional<ValuationTable>& nu = std::nullopt,
                    const std::optional<std::vector<double>>& weights = std::nullopt,
                    const Options& opt = {});

enum class GraphFormat { json, dot, csv };
GraphFormat parse_graph_format(std::string_view name);

std::string export_graph(const SpectrumGraph& g, GraphFormat format);

}  // namespace tgw
