#include "tgw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "tgw/error.hpp"

namespace tgw {

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
  auto out = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

}  // namespace

ValuationTable default_valuation(const Semiring& s) {
  ValuationTable nu;
  for (int g = 0; g < s.gamma_count(); ++g) {
    std::vector<double> row(s.size());
    for (int a = 0; a < s.size(); ++a) row[a] = a;
    nu.values.push_back(std::move(row));
  }
  return nu;
}

ValuationTable load_valuation(std::string_view text, const Semiring& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("valuation: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("valuation: expected an object keyed by parameter label");
  for (const auto& [key, _] : j.items()) s.gamma_index(key);
  ValuationTable nu;
  for (const auto& label : s.gamma()) {
    if (!j.contains(label)) throw ShapeError("valuation: missing parameter " + label);
    const auto& row = j.at(label);
    if (!row.is_array() || static_cast<int>(row.size()) != s.size()) {
      throw ShapeError("valuation: parameter " + label + " needs " + std::to_string(s.size()) + " values");
    }
    std::vector<double> values;
    for (const auto& x : row) {
      if (!x.is_number()) throw ParseError("valuation: non-numeric entry for " + label);
      values.push_back(x.get<double>());
    }
    nu.values.push_back(std::move(values));
  }
  return nu;
}

MetricResult metric_matrix(const Semiring& s, const SpectrumSpace& spec, const ValuationTable& nu) {
  const int p = static_cast<int>(spec.points.size());
  if (p == 0) throw PreconditionError("metric_matrix: empty spectrum");
  if (static_cast<int>(nu.values.size()) != s.gamma_count()) throw ShapeError("valuation shape mismatch");
  MetricResult out;
  double spread = 0;
  for (const auto& row : nu.values) {
    if (static_cast<int>(row.size()) != s.size()) throw ShapeError("valuation shape mismatch");
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    spread = std::max(spread, *hi - *lo);
  }
  out.max_distance = 1.0 + spread;
  out.distance = Matrix(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const Subset dead = spec.points[i].members | spec.points[j].members;
      const auto survivors = members(~dead & full_subset(s.size()));
      double best = std::numeric_limits<double>::infinity();
      for (int g = 0; g < s.gamma_count(); ++g)
        for (int a : survivors)
          for (int b : survivors) best = std::min(best, std::abs(nu(g, a) - nu(g, b)));
      if (survivors.empty()) {
        best = out.max_distance;
        out.capped_pairs.emplace_back(i, j);
      }
      out.distance(i, j) = out.distance(j, i) = best;
    }
  return out;
}

WeightReport fuzzy_weights(const Semiring& s, const SpectrumSpace& spec,
                           const std::optional<std::vector<double>>& table) {
  WeightReport out;
  const std::size_t p = spec.points.size();
  if (table) {
    if (table->size() != p) throw ShapeError("weights: one value per spectrum point required");
    for (double w : *table)
      if (!(w >= 0.0 && w <= 1.0)) throw ShapeError("weights must lie in [0, 1]");
    out.weights = *table;
  } else {
    for (const auto& pt : spec.points) {
      out.weights.push_back(1.0 - static_cast<double>(cardinality(pt.members)) / s.size());
    }
  }
  auto closed_weight = [&](Subset closed) {
    double w = 0;
    for (int i : members(closed)) w = std::max(w, out.weights[i]);
    return w;
  };
  for (std::size_t i = 0; i < spec.ideals.size(); ++i) out.closed_weights.push_back(closed_weight(spec.closed_sets[i]));
  for (std::size_t i = 0; i < spec.ideals.size(); ++i)
    for (std::size_t j = 0; j < spec.ideals.size(); ++j) {
      if (i == j || !is_subset_of(spec.ideals[i].members, spec.ideals[j].members)) continue;
      if (out.closed_weights[j] > out.closed_weights[i]) {
        out.monotone = false;
        out.monotonicity_failures.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  return out;
}

std::vector<double> load_weights(std::string_view text, std::size_t points) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("weights: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("weights: expected an array of reals");
  if (j.size() != points) throw ShapeError("weights: expected " + std::to_string(points) + " values");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError("weights: non-numeric entry");
    const double w = x.get<double>();
    if (!(w >= 0.0 && w <= 1.0)) throw ShapeError("weights: entry outside [0, 1]");
    out.push_back(w);
  }
  return out;
}

SpectrumGraph embed(const Semiring& s, int k, const std::optional<ValuationTable>& nu,
                    const std::optional<std::vector<double>>& weights, const Options& opt) {
  SpectrumGraph g;
  const SpectrumSpace spec = spectrum(s, opt);
  g.lenient = spec.lenient;
  const int p = static_cast<int>(spec.points.size());
  if (p == 0) throw PreconditionError("embed: " + s.name() + " has an empty spectrum");
  for (const auto& pt : spec.points) {
    g.points.push_back(pt.members);
    g.labels.push_back(render_subset(pt.members, s.elements()));
  }
  g.metric = metric_matrix(s, spec, nu ? *nu : default_valuation(s));
  for (const auto& [i, j] : g.metric.capped_pairs) {
    g.warnings.push_back("no survivors outside " + g.labels[i] + " u " + g.labels[j] + "; distance set to " +
                         fixed6(g.metric.max_distance));
  }
  g.weights = fuzzy_weights(s, spec, weights);
  g.adjacency = Matrix(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      g.adjacency(i, j) = std::exp(-g.metric.distance(i, j)) * g.weights.weights[i] * g.weights.weights[j];
    }
  g.eigen = jacobi_eigen(g.adjacency);
  if (!g.eigen.converged) g.warnings.push_back("eigensolver did not reach the tolerance");
  if (k < 1) throw PreconditionError("embedding dimension must be positive");
  if (k > p) {
    g.warnings.push_back("k = " + std::to_string(k) + " clamped to " + std::to_string(p));
    k = p;
  }
  g.k = k;
  g.coordinates = Matrix(p, k);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < k; ++j) g.coordinates(i, j) = g.eigen.vectors(i, j);
  g.reconstruction_error = max_abs_difference(g.adjacency, reconstruct(g.eigen));
  g.orthonormality = orthonormality_error(g.eigen.vectors);
  return g;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "dot") return GraphFormat::dot;
  if (name == "csv") return GraphFormat::csv;
  throw ParseError("unknown graph format: " + std::string(name));
}

std::string export_graph(const SpectrumGraph& g, GraphFormat format) {
  const int p = static_cast<int>(g.points.size());
  std::ostringstream out;
  switch (format) {
    case GraphFormat::json: {
      nlohmann::ordered_json j;
      j["points"] = g.labels;
      j["metric"] = matrix_json(g.metric.distance);
      j["max_distance"] = g.metric.max_distance;
      j["weights"] = g.weights.weights;
      j["weights_monotone"] = g.weights.monotone;
      j["adjacency"] = matrix_json(g.adjacency);
      j["eigenvalues"] = g.eigen.values;
      j["eigenvectors"] = matrix_json(g.eigen.vectors);
      j["k"] = g.k;
      j["coordinates"] = matrix_json(g.coordinates);
      j["reconstruction_error"] = g.reconstruction_error;
      j["orthonormality_error"] = g.orthonormality;
      j["warnings"] = g.warnings;
      j["lenient"] = g.lenient;
      out << j.dump(2) << "\n";
      break;
    }
    case GraphFormat::dot:
      out << "graph spectrum {\n";
      for (int i = 0; i < p; ++i) {
        out << "  " << dot_id("P" + std::to_string(i)) << " [label=" << dot_id(g.labels[i])
            << ", weight=" << fixed6(g.weights.weights[i]) << "];\n";
      }
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
          out << "  " << dot_id("P" + std::to_string(i)) << " -- " << dot_id("P" + std::to_string(j))
              << " [label=\"" << fixed6(g.adjacency(i, j)) << "\"];\n";
        }
      out << "}\n";
      break;
    case GraphFormat::csv:
      out << "label,weight";
      for (int j = 0; j < g.k; ++j) out << ",x" << (j + 1);
      out << "\n";
      for (int i = 0; i < p; ++i) {
        out << csv_field(g.labels[i]) << "," << fixed6(g.weights.weights[i]);
        for (int j = 0; j < g.k; ++j) out << "," << fixed6(g.coordinates(i, j));
        out << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace tgw
