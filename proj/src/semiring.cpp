#include "tgw/semiring.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include "json.hpp"

#include "tgw/error.hpp"

namespace tgw {

namespace {

using json = nlohmann::ordered_json;

int lookup(const std::vector<std::string>& labels, std::string_view label, const char* what) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw ReferenceError(std::string(what) + " label not declared: " + std::string(label));
  }
  return static_cast<int>(it - labels.begin());
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

std::vector<std::string> string_array(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) throw ParseError(std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) throw ParseError(std::string(key) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& expect_array(const json& j, std::size_t len, const std::string& what) {
  if (!j.is_array()) throw ShapeError(what + " must be an array");
  if (j.size() != len) {
    throw ShapeError(what + " has length " + std::to_string(j.size()) + ", expected " +
                     std::to_string(len));
  }
  return j;
}

}  // namespace

Semiring::Semiring(std::string name, std::vector<std::string> elements, int zero,
                   std::optional<int> unit, std::vector<std::string> gamma,
                   std::vector<int> add, std::vector<int> tri, bool commutative,
                   std::optional<int> anchor)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      zero_(zero),
      unit_(unit),
      gamma_(std::move(gamma)),
      add_(std::move(add)),
      tri_(std::move(tri)),
      commutative_(commutative),
      anchor_(anchor) {
  const std::size_t n = elements_.size(), g = gamma_.size();
  if (n == 0) throw ShapeError("structure needs at least one element");
  if (g == 0) throw ShapeError("structure needs at least one parameter");
  if (add_.size() != n * n) throw ShapeError("add table must be n x n");
  if (tri_.size() != n * g * n * g * n) throw ShapeError("tri table must be n x g x n x g x n");
  auto in_range = [n](int v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
  if (!in_range(zero_)) throw IndexError("zero out of range");
  if (unit_ && !in_range(*unit_)) throw IndexError("unit out of range");
  if (anchor_ && !in_range(*anchor_)) throw IndexError("anchor out of range");
  if (!std::all_of(add_.begin(), add_.end(), in_range)) throw IndexError("add entry out of range");
  if (!std::all_of(tri_.begin(), tri_.end(), in_range)) throw IndexError("tri entry out of range");
}

int Semiring::element_index(std::string_view label) const {
  return lookup(elements_, label, "element");
}

int Semiring::gamma_index(std::string_view label) const { return lookup(gamma_, label, "gamma"); }

Semiring load_structure(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("fixture must be a JSON object");

  const json& name = field(j, "name");
  if (!name.is_string()) throw ParseError("name must be a string");
  auto elements = string_array(j, "elements");
  auto gamma = string_array(j, "gamma");
  const std::size_t n = elements.size(), g = gamma.size();
  if (n == 0) throw ShapeError("elements must be nonempty");
  if (g == 0) throw ShapeError("gamma must be nonempty");

  auto label_of = [&](const json& e) {
    if (!e.is_string()) throw ParseError("table entries must be element labels");
    return lookup(elements, e.get<std::string>(), "element");
  };

  const json& zero = field(j, "zero");
  if (!zero.is_string()) throw ParseError("zero must be a string");
  std::optional<int> unit;
  if (auto it = j.find("unit"); it != j.end() && !it->is_null()) unit = label_of(*it);
  std::optional<int> anchor;
  if (auto it = j.find("anchor"); it != j.end() && !it->is_null()) anchor = label_of(*it);
  bool commutative = true;
  if (auto it = j.find("commutative"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("commutative must be a boolean");
    commutative = it->get<bool>();
  }

  std::vector<int> add;
  add.reserve(n * n);
  for (const auto& row : expect_array(field(j, "add"), n, "add")) {
    for (const auto& e : expect_array(row, n, "add row")) add.push_back(label_of(e));
  }

  std::vector<int> tri;
  tri.reserve(n * g * n * g * n);
  for (const auto& l1 : expect_array(field(j, "tri"), n, "tri"))
    for (const auto& l2 : expect_array(l1, g, "tri[a]"))
      for (const auto& l3 : expect_array(l2, n, "tri[a][alpha]"))
        for (const auto& l4 : expect_array(l3, g, "tri[a][alpha][b]"))
          for (const auto& e : expect_array(l4, n, "tri[a][alpha][b][beta]"))
            tri.push_back(label_of(e));

  return Semiring(name.get<std::string>(), elements, label_of(zero), unit, gamma, std::move(add),
                  std::move(tri), commutative, anchor);
}

std::string serialize_structure(const Semiring& s) {
  const int n = s.size(), g = s.gamma_count();
  json j;
  j["name"] = s.name();
  j["elements"] = s.elements();
  j["zero"] = s.label(s.zero());
  j["unit"] = s.unit() ? json(s.label(*s.unit())) : json(nullptr);
  j["gamma"] = s.gamma();
  json add = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(s.label(s.add(a, b)));
    add.push_back(row);
  }
  j["add"] = add;
  json tri = json::array();
  for (int a = 0; a < n; ++a) {
    json l1 = json::array();
    for (int al = 0; al < g; ++al) {
      json l2 = json::array();
      for (int b = 0; b < n; ++b) {
        json l3 = json::array();
        for (int be = 0; be < g; ++be) {
          json l4 = json::array();
          for (int c = 0; c < n; ++c) l4.push_back(s.label(s.tri(a, al, b, be, c)));
          l3.push_back(l4);
        }
        l2.push_back(l3);
      }
      l1.push_back(l2);
    }
    tri.push_back(l1);
  }
  j["tri"] = tri;
  j["commutative"] = s.commutative();
  if (s.anchor()) j["anchor"] = s.label(*s.anchor());
  return j.dump(2) + "\n";
}

int tri_eval(const Semiring& s, int a, int alpha, int b, int beta, int c) {
  const int n = s.size(), g = s.gamma_count();
  auto el = [n](int x) { return x >= 0 && x < n; };
  auto pa = [g](int x) { return x >= 0 && x < g; };
  if (!el(a) || !el(b) || !el(c) || !pa(alpha) || !pa(beta)) {
    throw IndexError("tri_eval: index out of range");
  }
  return s.tri(a, alpha, b, beta, c);
}

AxiomReport check_axioms(const Semiring& s) {
  const int n = s.size(), g = s.gamma_count();
  const int z = s.zero();
  std::vector<Violation> out;
  auto record = [&out](const char* law, std::vector<int> w, int l, int r) {
    if (l != r) out.push_back({law, std::move(w), l, r});
  };

  for (int a = 0; a < n; ++a) {
    record("add-identity", {a}, s.add(a, z), a);
    for (int b = 0; b < n; ++b) {
      record("add-commutativity", {a, b}, s.add(a, b), s.add(b, a));
      for (int c = 0; c < n; ++c) {
        record("add-associativity", {a, b, c}, s.add(s.add(a, b), c), s.add(a, s.add(b, c)));
      }
    }
  }

  for (int a = 0; a < n; ++a)
    for (int al = 0; al < g; ++al)
      for (int b = 0; b < n; ++b)
        for (int be = 0; be < g; ++be)
          for (int c = 0; c < n; ++c) {
            const int v = s.tri(a, al, b, be, c);
            if (a == z || b == z || c == z) record("zero-absorption", {a, al, b, be, c}, v, z);
            if (s.commutative()) {
              const std::array<std::array<int, 3>, 5> perms{
                  {{a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
              for (const auto& p : perms) {
                record("commutativity", {a, al, b, be, c, p[0], p[1], p[2]}, v,
                       s.tri(p[0], al, p[1], be, p[2]));
              }
            }
            for (int x = 0; x < n; ++x) {
              record("distributivity-1", {a, x, al, b, be, c}, s.tri(s.add(a, x), al, b, be, c),
                     s.add(v, s.tri(x, al, b, be, c)));
              record("distributivity-2", {a, al, b, x, be, c}, s.tri(a, al, s.add(b, x), be, c),
                     s.add(v, s.tri(a, al, x, be, c)));
              record("distributivity-3", {a, al, b, be, c, x}, s.tri(a, al, b, be, s.add(c, x)),
                     s.add(v, s.tri(a, al, b, be, x)));
            }
            for (int ga = 0; ga < g; ++ga)
              for (int d = 0; d < n; ++d)
                for (int de = 0; de < g; ++de)
                  for (int e = 0; e < n; ++e) {
                    const int outer = s.tri(v, ga, d, de, e);
                    const int middle = s.tri(a, al, s.tri(b, be, c, ga, d), de, e);
                    const int inner = s.tri(a, al, b, be, s.tri(c, ga, d, de, e));
                    record("ternary-associativity-12", {a, al, b, be, c, ga, d, de, e}, outer,
                           middle);
                    record("ternary-associativity-23", {a, al, b, be, c, ga, d, de, e}, middle,
                           inner);
                  }
          }

  if (s.unit()) {
    const int u = *s.unit();
    for (int al = 0; al < g; ++al)
      for (int be = 0; be < g; ++be)
        for (int a = 0; a < n; ++a) record("unit", {al, be, a}, s.tri(u, al, u, be, a), a);
  }

  std::sort(out.begin(), out.end());
  return {std::move(out), {}};
}

std::pair<int, int> reevaluate(const Semiring& s, const Violation& v) {
  const auto& w = v.witness;
  const int z = s.zero();
  if (v.law == "add-identity") return {s.add(w[0], z), w[0]};
  if (v.law == "add-commutativity") return {s.add(w[0], w[1]), s.add(w[1], w[0])};
  if (v.law == "add-associativity") {
    return {s.add(s.add(w[0], w[1]), w[2]), s.add(w[0], s.add(w[1], w[2]))};
  }
  if (v.law == "zero-absorption") return {s.tri(w[0], w[1], w[2], w[3], w[4]), z};
  if (v.law == "commutativity") {
    return {s.tri(w[0], w[1], w[2], w[3], w[4]), s.tri(w[5], w[1], w[6], w[3], w[7])};
  }
  if (v.law == "distributivity-1") {
    return {s.tri(s.add(w[0], w[1]), w[2], w[3], w[4], w[5]),
            s.add(s.tri(w[0], w[2], w[3], w[4], w[5]), s.tri(w[1], w[2], w[3], w[4], w[5]))};
  }
  if (v.law == "distributivity-2") {
    return {s.tri(w[0], w[1], s.add(w[2], w[3]), w[4], w[5]),
            s.add(s.tri(w[0], w[1], w[2], w[4], w[5]), s.tri(w[0], w[1], w[3], w[4], w[5]))};
  }
  if (v.law == "distributivity-3") {
    return {s.tri(w[0], w[1], w[2], w[3], s.add(w[4], w[5])),
            s.add(s.tri(w[0], w[1], w[2], w[3], w[4]), s.tri(w[0], w[1], w[2], w[3], w[5]))};
  }
  if (v.law == "ternary-associativity-12" || v.law == "ternary-associativity-23") {
    const int outer = s.tri(s.tri(w[0], w[1], w[2], w[3], w[4]), w[5], w[6], w[7], w[8]);
    const int middle = s.tri(w[0], w[1], s.tri(w[2], w[3], w[4], w[5], w[6]), w[7], w[8]);
    const int inner = s.tri(w[0], w[1], w[2], w[3], s.tri(w[4], w[5], w[6], w[7], w[8]));
    return v.law == "ternary-associativity-12" ? std::pair{outer, middle}
                                               : std::pair{middle, inner};
  }
  if (v.law == "unit") return {s.tri(*s.unit(), w[0], *s.unit(), w[1], w[2]), w[2]};
  throw PreconditionError("unknown law id: " + v.law);
}

bool require_axioms(const Semiring& s, const Options& opt) {
  const auto report = check_axioms(s);
  if (report.passed()) return false;
  if (!opt.lenient) {
    const auto& v = report.violations.front();
    throw AxiomError("structure " + s.name() + " fails " + std::to_string(report.violations.size()) +
                     " axiom instance(s), first: " + v.law + " (use lenient mode to proceed)");
  }
  return true;
}

Semiring product(const Semiring& left, const Semiring& right, std::string name) {
  if (left.gamma_count() != right.gamma_count()) {
    throw ShapeError("product needs matching parameter sets");
  }
  const int n1 = left.size(), n2 = right.size(), g = left.gamma_count();
  const int n = n1 * n2;
  auto idx = [n2](int x, int y) { return x * n2 + y; };
  std::vector<std::string> labels;
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) labels.push_back("(" + left.label(x) + "," + right.label(y) + ")");
  std::vector<int> add(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      add[p * n + q] = idx(left.add(p / n2, q / n2), right.add(p % n2, q % n2));
  std::vector<int> tri;
  tri.reserve(static_cast<std::size_t>(n) * g * n * g * n);
  for (int p = 0; p < n; ++p)
    for (int al = 0; al < g; ++al)
      for (int q = 0; q < n; ++q)
        for (int be = 0; be < g; ++be)
          for (int r = 0; r < n; ++r)
            tri.push_back(idx(left.tri(p / n2, al, q / n2, be, r / n2),
                              right.tri(p % n2, al, q % n2, be, r % n2)));
  std::optional<int> unit;
  if (left.unit() && right.unit()) unit = idx(*left.unit(), *right.unit());
  return Semiring(std::move(name), std::move(labels), idx(left.zero(), right.zero()), unit,
                  left.gamma(), std::move(add), std::move(tri),
                  left.commutative() && right.commutative());
}

}  // namespace tgw
