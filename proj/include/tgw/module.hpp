#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgw/ideals.hpp"
#include "tgw/options.hpp"
#include "tgw/semiring.hpp"
#include "tgw/subset.hpp"

namespace tgw {

// Which compatibility law between the action and the ternary product a
// module fixture asks to be checked. `nested` is
//   act(tri(a,al,b,be,c), ga, m, de, d) = act(a, al, act(b, be, m, ga, c), de, d).
enum class M2Profile { none, nested };

/// A finite ternary Gamma-module: a commutative monoid with an action
/// act(a, alpha, m, beta, b) of two base elements and two parameters.
class GammaModule {
 public:
  GammaModule(std::shared_ptr<const Semiring> base, std::string name,
              std::vector<std::string> carrier, int zero, std::vector<int> madd,
              std::vector<int> act, M2Profile profile = M2Profile::none);

  const Semiring& base() const { return *base_; }
  const std::shared_ptr<const Semiring>& base_ptr() const { return base_; }
  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(carrier_.size()); }
  int zero() const { return zero_; }
  M2Profile profile() const { return profile_; }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& label(int m) const { return carrier_[m]; }

  int add(int x, int y) const { return madd_[x * size() + y]; }
  int act(int a, int alpha, int m, int beta, int b) const {
    const std::size_t n = base_->size(), g = base_->gamma_count(), k = carrier_.size();
    return act_[(((static_cast<std::size_t>(a) * g + alpha) * k + m) * g + beta) * n + b];
  }
  const std::vector<int>& add_table() const { return madd_; }
  const std::vector<int>& act_table() const { return act_; }

  int element_index(std::string_view label) const;

  GammaModule renamed(std::string name) const;

  // Same base (by identity or by value), same tables. Names are ignored.
  bool same_tables(const GammaModule& other) const;

 private:
  std::shared_ptr<const Semiring> base_;
  std::string name_;
  std::vector<std::string> carrier_;
  int zero_;
  std::vector<int> madd_;
  std::vector<int> act_;
  M2Profile profile_;
};

// Parses a module fixture; its `base` field must name `base`.
GammaModule load_module(std::string_view text, std::shared_ptr<const Semiring> base);
std::string serialize_module(const GammaModule& m);

// Carrier T, act = tri.
GammaModule regular_module(std::shared_ptr<const Semiring> s);
GammaModule zero_module(std::shared_ptr<const Semiring> s);
// Componentwise carrier product with labels "(x,y)".
GammaModule direct_sum(const GammaModule& left, const GammaModule& right);
// The carrier restricted to a subset closed under the operations.
GammaModule submodule(const GammaModule& m, Subset members, std::string name = {});

// Module law ids and witness layouts:
//   madd-associativity (x, y, z); madd-commutativity (x, y); madd-identity (x)
//   act-additive-left   (a, a', alpha, m, beta, b)
//   act-additive-middle (a, alpha, m, m', beta, b)
//   act-additive-right  (a, alpha, m, beta, b, b')
//   act-zero-module     (a, alpha, beta, b)
//   act-zero-absorption (a, alpha, m, beta, b)   with a or b the base zero
//   compatibility-nested (a, al, b, be, c, ga, m, de, d)   m2_profile "nested" only
// Base structure violations are copied into `warnings`.
AxiomReport check_module_axioms(const GammaModule& m);

bool module_axioms_hold(const GammaModule& m);

// Throws AxiomError unless the module and its base pass, or opt.lenient.
// Returns the lenient tag.
bool require_module_axioms(const GammaModule& m, const Options& opt);

// Submodule lattice -------------------------------------------------------

// Contains zero, closed under madd and every action.
bool is_submodule(const GammaModule& m, Subset s);
// Least submodule containing the seed.
Subset generated_submodule(const GammaModule& m, Subset seed);
// All submodules, ascending by cardinality then lexicographically.
std::vector<Subset> enumerate_submodules(const GammaModule& m, const Options& opt = {});
// Greedy generating set: repeatedly adds the element whose span grows most.
std::vector<int> generating_set(const GammaModule& m);

// Congruences ------------------------------------------------------------

struct ModuleCongruence {
  std::vector<int> class_of;  // canonical: classes numbered by first occurrence
  int class_count = 0;
  bool compatible = true;
  std::string witness;        // first incompatibility when not compatible

  friend bool operator==(const ModuleCongruence& a, const ModuleCongruence& b) {
    return a.class_of == b.class_of;
  }
};

// Fills compatible / witness for a given partition.
ModuleCongruence make_congruence(const GammaModule& m, std::vector<int> class_of);
// Least congruence containing the given pairs.
ModuleCongruence congruence_closure(const GammaModule& m,
                                    const std::vector<std::pair<int, int>>& pairs);
// All compatible congruences, ordered by class count descending (identity
// first) then by canonical partition.
std::vector<ModuleCongruence> enumerate_congruences(const GammaModule& m, const Options& opt = {});

// Carrier = classes labelled "[rep]", operations through minimal
// representatives.
GammaModule quotient_module(const GammaModule& m, const ModuleCongruence& c, std::string name = {});

struct BourneQuotient {
  GammaModule quotient;
  ModuleCongruence congruence;
};

// m ~ m' iff m + k = m' + k' for some k, k' in the submodule.
BourneQuotient bourne_quotient(const GammaModule& m, Subset sub);

// Homomorphisms -----------------------------------------------------------

struct ModuleHom {
  std::vector<int> map;
  bool verified = false;

  friend bool operator==(const ModuleHom&, const ModuleHom&) = default;
  friend auto operator<=>(const ModuleHom&, const ModuleHom&) = default;
};

// map(zero) = zero, additive, action-equivariant.
bool is_hom(const GammaModule& src, const GammaModule& dst, const std::vector<int>& map);
bool is_bijective(const std::vector<int>& map, int target_size);
std::vector<int> inverse_map(const std::vector<int>& map);

// All homomorphisms, sorted by map. Candidates come from assigning images to
// a generating set and propagating through addition and the action.
std::vector<ModuleHom> hom_set(const GammaModule& src, const GammaModule& dst, const Options& opt = {});

// A bijective hom whose inverse is also a hom.
std::optional<ModuleHom> find_isomorphism(const GammaModule& a, const GammaModule& b,
                                          const Options& opt = {});

Subset kernel(const GammaModule& src, const GammaModule& dst, const std::vector<int>& map);
Subset image(const std::vector<int>& map);

}  // namespace tgw
