#include "tgw/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tgw/error.hpp"

namespace tgw {

namespace {

Semiring make_b2() {
  std::vector<int> add = {0, 1, 1, 1};
  std::vector<int> tri;
  for (int a = 0; a < 2; ++a)
    for (int al = 0; al < 2; ++al)
      for (int b = 0; b < 2; ++b)
        for (int be = 0; be < 2; ++be)
          for (int c = 0; c < 2; ++c) tri.push_back(a & b & c);
  return Semiring("B2", {"0", "1"}, 0, 1, {"g0", "g1"}, std::move(add), std::move(tri));
}

Semiring make_z3() {
  std::vector<int> add;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) add.push_back((a + b) % 3);
  std::vector<int> tri;
  for (int a = 0; a < 3; ++a)
    for (int al = 0; al < 2; ++al)
      for (int b = 0; b < 3; ++b)
        for (int be = 0; be < 2; ++be)
          for (int c = 0; c < 3; ++c) tri.push_back((a + b + c + al + be) % 3);
  return Semiring("Z3", {"0", "1", "2"}, 0, std::nullopt, {"g0", "g1"}, std::move(add), std::move(tri),
                  true, 0);
}

}  // namespace

std::vector<std::string> bundled_structure_names() { return {"B2", "Z3", "B2xB2"}; }

bool is_bundled_structure(std::string_view name) {
  return name == "B2" || name == "Z3" || name == "B2xB2";
}

std::shared_ptr<const Semiring> bundled_structure(std::string_view name) {
  if (name == "B2") return std::make_shared<const Semiring>(make_b2());
  if (name == "Z3") return std::make_shared<const Semiring>(make_z3());
  if (name == "B2xB2") {
    const Semiring b2 = make_b2();
    return std::make_shared<const Semiring>(product(b2, b2, "B2xB2"));
  }
  throw ReferenceError("unknown bundled structure: " + std::string(name));
}

std::vector<std::string> bundled_module_names(std::string_view structure) {
  if (structure == "B2") return {"regular", "T2", "zero"};
  if (is_bundled_structure(structure)) return {"regular", "zero"};
  throw ReferenceError("unknown bundled structure: " + std::string(structure));
}

GammaModule bundled_module(std::shared_ptr<const Semiring> base, std::string_view name) {
  if (name == "regular") return regular_module(base);
  if (name == "zero") return zero_module(base);
  if (name == "T2") {
    const GammaModule r = regular_module(base);
    return direct_sum(r, r).renamed(base->name() + "/T2");
  }
  throw ReferenceError("unknown bundled module: " + std::string(name));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReferenceError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::shared_ptr<const Semiring> resolve_structure(const std::string& arg) {
  if (is_bundled_structure(arg)) return bundled_structure(arg);
  if (!std::filesystem::exists(arg)) {
    throw ReferenceError("no bundled structure or file named " + arg);
  }
  return std::make_shared<const Semiring>(load_structure(read_text_file(arg)));
}

GammaModule resolve_module(std::shared_ptr<const Semiring> base, const std::string& arg) {
  std::string name = arg;
  if (const auto slash = arg.find('/'); slash != std::string::npos && !std::filesystem::exists(arg)) {
    if (arg.substr(0, slash) != base->name()) {
      throw ReferenceError("module " + arg + " does not belong to " + base->name());
    }
    name = arg.substr(slash + 1);
  }
  if (name == "regular" || name == "zero" || name == "T2") return bundled_module(base, name);
  if (!std::filesystem::exists(arg)) throw ReferenceError("no module named " + arg);
  return load_module(read_text_file(arg), base);
}

}  // namespace tgw
