#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgw/ideals.hpp"
#include "tgw/module.hpp"

namespace tgw {

// |M| > 1 and every submodule is either {0} or M.
bool is_simple(const GammaModule& m, const Options& opt = {});

// {a : act(a, alpha, m, beta, b) = 0 for all m, b, alpha, beta}, with the base
// zero always included. is_ideal reports whether the set is an ideal of T.
IdealSet annihilator(const GammaModule& m, const Options& opt = {});
// Same, restricted to a single carrier element.
IdealSet element_annihilator(const GammaModule& m, int element);

struct FaithfulReport {
  bool faithful = false;
  std::optional<int> witness;  // nonzero annihilating base element
};

FaithfulReport is_faithful(const GammaModule& m, const Options& opt = {});

/// Endomorphisms with pointwise addition and composition.
struct EndReport {
  std::vector<ModuleHom> endos;
  // endos x endos -> endo index, -1 when the result is not in the list.
  std::vector<int> add_table;
  std::vector<int> compose_table;  // (f, g) -> f o g
  int zero_index = -1;             // the zero map, when it is a hom
  int identity_index = -1;
  bool closed = true;
  int bijective_count = 0;
  // Maps satisfying only the equivariance law (no additivity or zero
  // condition); -1 when the brute-force census exceeds the budget.
  long long equivariant_map_count = -1;
  bool simple = false;
  // Present only for simple modules.
  std::optional<bool> schur;           // every nonzero endo bijective
  std::optional<bool> local;           // every nonzero endo invertible in End
  std::vector<int> schur_counterexamples;
  bool lenient = false;
};

EndReport end_semiring(const GammaModule& m, const Options& opt = {});

struct DensityWitness {
  int source = 0, target = 0;  // (m, n)
  int element = 0, alpha = 0, beta = 0;
};

struct DensityReport {
  bool dense = false;
  int anchor = 0;
  std::vector<DensityWitness> witnesses;
  std::optional<std::pair<int, int>> failure;  // first unsolvable (m, n)
  std::optional<bool> rank2;
  bool lenient = false;
};

// For every nonzero m and every n, finds a, alpha, beta with
// act(a, alpha, m, beta, anchor) = n. Search order: alpha, beta, then a.
// The anchor defaults to the unit, then to the structure's declared anchor.
DensityReport density_check(const GammaModule& m, std::optional<int> anchor = std::nullopt,
                            bool check_rank2 = false, const Options& opt = {});

struct IsoInstance {
  std::string theorem;  // "first", "second", "third"
  bool holds = false;
  int left_size = 0, right_size = 0;
  std::string detail;
};

// First isomorphism theorem for a hom f : M -> N.
IsoInstance first_isomorphism(const GammaModule& m, const GammaModule& n, const std::vector<int>& f,
                              const Options& opt = {});
// (N + P)/P against N/(N n P) for submodules N, P of M.
IsoInstance second_isomorphism(const GammaModule& m, Subset n, Subset p, const Options& opt = {});
// (M/P)/(N/P) against M/N for submodules P inside N inside M.
IsoInstance third_isomorphism(const GammaModule& m, Subset n, Subset p, const Options& opt = {});

struct CatalogEntry {
  GammaModule module;
  ModuleCongruence congruence;
  bool simple = false;
};

// The regular module and its quotients by compatible congruences, up to
// isomorphism, ordered by cardinality then partition.
std::vector<CatalogEntry> cyclic_module_catalog(std::shared_ptr<const Semiring> s, const Options& opt = {});

struct RadicalReport {
  IdealSet radical;
  std::vector<IdealSet> primitive;  // annihilators of the simple entries
  bool catalog_relative = true;
  bool semiprimitive = false;       // radical = {0}
};

RadicalReport jacobson_radical(const Semiring& s, const std::vector<CatalogEntry>& catalog,
                               const Options& opt = {});

struct SemisimpleReport {
  bool semisimple = false;
  std::vector<Subset> decomposition;
  std::vector<Subset> simple_submodules;
};

// Looks for simple submodules with pairwise {0} intersections whose sum map
// from their product onto M is a bijection.
SemisimpleReport is_semisimple(const GammaModule& m, const Options& opt = {});

}  // namespace tgw
