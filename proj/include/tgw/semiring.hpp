#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgw/options.hpp"

namespace tgw {

/// A finite commutative ternary Gamma-semiring given by explicit tables.
///
/// Elements and parameters are addressed by index. The ternary product takes
/// two parameters, tri(a, alpha, b, beta, c); a one-parameter product
/// {a b c}_gamma is encoded by making the table depend on a function of
/// (alpha, beta). Instances are immutable once constructed.
class Semiring {
 public:
  Semiring(std::string name, std::vector<std::string> elements, int zero,
           std::optional<int> unit, std::vector<std::string> gamma,
           std::vector<int> add, std::vector<int> tri, bool commutative = true,
           std::optional<int> anchor = std::nullopt);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int gamma_count() const { return static_cast<int>(gamma_.size()); }
  int zero() const { return zero_; }
  const std::optional<int>& unit() const { return unit_; }
  // Element used as the right-hand slot in density searches when there is no
  // unit.
  const std::optional<int>& anchor() const { return anchor_; }
  bool commutative() const { return commutative_; }

  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::string>& gamma() const { return gamma_; }
  const std::string& label(int a) const { return elements_[a]; }

  int add(int a, int b) const { return add_[a * size() + b]; }
  int tri(int a, int alpha, int b, int beta, int c) const {
    return tri_[tri_index(a, alpha, b, beta, c)];
  }

  const std::vector<int>& add_table() const { return add_; }
  const std::vector<int>& tri_table() const { return tri_; }

  // Index lookup by label; throws ReferenceError.
  int element_index(std::string_view label) const;
  int gamma_index(std::string_view label) const;

  friend bool operator==(const Semiring&, const Semiring&) = default;

 private:
  std::size_t tri_index(int a, int alpha, int b, int beta, int c) const {
    const std::size_t n = elements_.size(), g = gamma_.size();
    return (((static_cast<std::size_t>(a) * g + alpha) * n + b) * g + beta) * n + c;
  }

  std::string name_;
  std::vector<std::string> elements_;
  int zero_;
  std::optional<int> unit_;
  std::vector<std::string> gamma_;
  std::vector<int> add_;
  std::vector<int> tri_;
  bool commutative_;
  std::optional<int> anchor_;
};

/// One failed law instance. The witness lists element and parameter indices
/// in the order documented for each law id.
struct Violation {
  std::string law;
  std::vector<int> witness;
  int left = 0;
  int right = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  std::vector<Violation> violations;
  // Failures inherited from an underlying structure (module reports put the
  // base semiring's violations here).
  std::vector<Violation> warnings;

  bool passed() const { return violations.empty(); }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

Semiring load_structure(std::string_view text);
std::string serialize_structure(const Semiring& s);

// Exhaustive check of every structural law. Violations are sorted by law id,
// then witness.
//
// Law ids and witness layouts:
//   add-associativity        (a, b, c)
//   add-commutativity        (a, b)
//   add-identity             (a)
//   commutativity            (a, alpha, b, beta, c, x, y, z)  (x,y,z) a permutation of (a,b,c)
//   distributivity-1         (a, a', alpha, b, beta, c)
//   distributivity-2         (a, alpha, b, b', beta, c)
//   distributivity-3         (a, alpha, b, beta, c, c')
//   ternary-associativity-12 (a, alpha, b, beta, c, gamma, d, delta, e)
//   ternary-associativity-23 (a, alpha, b, beta, c, gamma, d, delta, e)
//   unit                     (alpha, beta, a)
//   zero-absorption          (a, alpha, b, beta, c)
AxiomReport check_axioms(const Semiring& s);

// Recomputes the two sides of a reported violation from its witness.
std::pair<int, int> reevaluate(const Semiring& s, const Violation& v);

// Bounds-checked product lookup.
int tri_eval(const Semiring& s, int a, int alpha, int b, int beta, int c);

// Throws AxiomError when s fails its axioms and opt.lenient is false.
// Returns true when the caller is running leniently on a failing structure,
// i.e. when results must carry the lenient tag.
bool require_axioms(const Semiring& s, const Options& opt);

// Componentwise product structure; labels are "(x,y)".
Semiring product(const Semiring& left, const Semiring& right, std::string name);

}  // namespace tgw
