#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgw/module.hpp"
#include "tgw/module_theory.hpp"
#include "tgw/monoid.hpp"
#include "tgw/options.hpp"

namespace tgw {

// Free modules and resolutions ---------------------------------------------

// Carrier T^r in lexicographic order (first coordinate most significant),
// componentwise operations. Requires a unit.
GammaModule free_module(std::shared_ptr<const Semiring> s, int rank, const Options& opt = {});

// Element index of a coordinate tuple in free_module(s, tuple.size()).
int free_index(int base_size, const std::vector<int>& coords);
std::vector<int> free_coords(int base_size, int rank, int index);
// Basis vector e_i of T^r.
int basis_vector(const Semiring& s, int rank, int i);

// x -> sum_i act(x_i, alpha0, images[i], beta0, unit) from T^r into target.
std::vector<int> free_map(const GammaModule& free, int rank, const GammaModule& target,
                          const std::vector<int>& images, int alpha0 = 0, int beta0 = 0);

struct FreeResolution {
  int alpha0 = 0, beta0 = 0;
  std::vector<int> ranks;           // r0, r1, r2
  std::vector<GammaModule> modules;  // P0, P1, P2
  std::vector<int> augmentation;    // pi : P0 -> M
  std::vector<int> d1;              // P1 -> P0
  std::vector<int> d2;              // P2 -> P1
  std::vector<int> generators0;     // images of the basis of P0 in M
  std::vector<int> generators1;     // images of the basis of P1 in P0
  std::vector<int> generators2;     // images of the basis of P2 in P1
  Subset kernel0 = 0;               // ker pi
  Subset kernel1 = 0;               // ker d1
  bool surjective = false;
  bool exact_at_p0 = false;         // im d1 = ker pi
  bool exact_at_p1 = false;         // im d2 = ker d1
  bool maps_are_homs = false;
  bool lenient = false;

  bool exact() const { return surjective && exact_at_p0 && exact_at_p1; }
};

FreeResolution free_resolution(const GammaModule& m, const Options& opt = {}, int alpha0 = 0,
                               int beta0 = 0);

// Tensor products ------------------------------------------------------------

enum class TensorBackend { automatic, idempotent, group, saturation };

const char* backend_name(TensorBackend b);
TensorBackend parse_backend(std::string_view name);

struct TensorRelation {
  std::string family;      // zero-left, zero-right, bilinear-left, bilinear-right, balance
  std::vector<int> left;   // generator multiset (sorted generator ids)
  std::vector<int> right;
};

/// M (x) N as a monoid on generator classes, with the induced action.
struct TensorProduct {
  MonoidPresentation presentation;
  int left_size = 0, right_size = 0;  // |M|, |N|; generator id = m * |N| + n
  std::vector<int> generator_class;   // generator -> class
  std::vector<std::vector<int>> class_terms;  // class -> generators summing to it
  std::vector<TensorRelation> relations;
  // Induced action act(a, al, [sum m_i (x) n_i], be, b) = [sum act_M(...) (x) n_i].
  std::optional<GammaModule> module;
  bool action_well_defined = true;
  std::string action_witness;
  std::vector<std::size_t> relation_counts;  // per family, in family order

  int class_of(int m, int n) const { return generator_class[m * right_size + n]; }
};

TensorProduct tensor(const GammaModule& m, const GammaModule& n,
                     TensorBackend backend = TensorBackend::automatic, const Options& opt = {});

// Whether a backend can run on this pair.
bool backend_applies(const GammaModule& m, const GammaModule& n, TensorBackend backend);

// f (x) id_N between two tensor products with the same right factor.
std::vector<int> tensor_map(const TensorProduct& src, const TensorProduct& dst,
                            const std::vector<int>& f);

struct BackendAgreement {
  std::vector<std::string> backends;  // applicable backends that were run
  bool agree = true;                  // presentations pairwise isomorphic
  bool natural = true;                // the isomorphism matches generator classes
};

BackendAgreement compare_backends(const GammaModule& m, const GammaModule& n,
                                  const Options& opt = {});

// Ext and Tor ----------------------------------------------------------------

struct ExtReport {
  MonoidPresentation ext1;
  std::size_t hom0 = 0, hom1 = 0, hom2 = 0;  // |Hom(P_i, N)|
  std::size_t cycles = 0, boundaries = 0;    // |Z^1|, |B^1|
  std::size_t ext0 = 0;                      // |ker d1*|
  std::size_t hom_mn = 0;                    // |Hom(M, N)|
  bool ext0_matches = false;
  bool exact = false;
  bool lenient = false;
};

ExtReport ext1(const GammaModule& m, const GammaModule& n, const Options& opt = {});

struct TorReport {
  MonoidPresentation tor1;
  MonoidPresentation tor0;
  int tensor_size = 0;                 // |M (x) N|
  bool tor0_matches = false;           // Tor_0 isomorphic to M (x) N
  bool complex_ok = false;             // im(d2 (x) id) inside ker(d1 (x) id)
  bool maps_well_defined = true;
  std::string backend;
  bool lenient = false;
};

TorReport tor1(const GammaModule& m, const GammaModule& n,
               TensorBackend backend = TensorBackend::automatic, const Options& opt = {});

// Adjunction -------------------------------------------------------------------

struct HomModule {
  std::vector<ModuleHom> homs;
  std::optional<GammaModule> module;  // absent when pointwise operations leave the set
  std::string witness;
};

// Hom(N, P) with pointwise addition and act(a,al,f,be,b)(n) = act_P(a,al,f(n),be,b).
HomModule hom_module(const GammaModule& n, const GammaModule& p, const Options& opt = {});

struct AdjunctionReport {
  std::size_t lhs = 0;  // |Hom(M (x) N, P)|
  std::size_t rhs = 0;  // |Hom(M, Hom(N, P))|
  bool tensor_well_defined = true;
  bool hom_module_closed = true;
  bool phi_total = false;       // Phi lands in the right-hand side
  bool psi_total = false;       // Psi lands in the left-hand side
  bool round_trip_left = false;  // Psi o Phi = id
  bool round_trip_right = false;  // Phi o Psi = id
  std::string detail;
  bool lenient = false;

  bool bijection() const {
    return lhs == rhs && phi_total && psi_total && round_trip_left && round_trip_right;
  }
};

AdjunctionReport adjunction_check(const GammaModule& m, const GammaModule& n, const GammaModule& p,
                                  const Options& opt = {});

struct InternalHomReport {
  std::vector<ModuleHom> homs;  // Hom(N, T)
  // (f, al, g, be, h) -> index into homs, -1 when the pointwise product is
  // not a hom or not in the list.
  std::vector<int> table;
  bool closed = true;
  std::optional<std::vector<int>> witness;  // (f, al, g, be, h)
  int zero_index = -1;
  int identity_index = -1;  // the identity when N is the regular module
};

InternalHomReport internal_hom_ternary(const GammaModule& n, const Options& opt = {});

struct SemisimplicityReport {
  bool semisimple = false;  // Ext^1 trivial over all catalog pairs
  std::optional<std::pair<int, int>> witness;  // first pair with nontrivial Ext^1
  std::size_t pairs_checked = 0;
  bool radical_zero = false;
  bool consistent = false;  // semisimple == radical_zero
  bool lenient = false;
};

SemisimplicityReport homological_semisimplicity(const std::vector<CatalogEntry>& catalog,
                                                const Options& opt = {});

}  // namespace tgw
