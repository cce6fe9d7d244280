#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tgw/module.hpp"
#include "tgw/semiring.hpp"

namespace tgw {

// B2, Z3, B2xB2 in that order.
std::vector<std::string> bundled_structure_names();
bool is_bundled_structure(std::string_view name);
// Throws ReferenceError for unknown names.
std::shared_ptr<const Semiring> bundled_structure(std::string_view name);

// Module names available for a bundled structure ("regular", "zero", ...).
std::vector<std::string> bundled_module_names(std::string_view structure);
// "regular", "zero" for any structure; "T2" is the regular module squared.
GammaModule bundled_module(std::shared_ptr<const Semiring> base, std::string_view name);

// A bundled name or a path to a structure file.
std::shared_ptr<const Semiring> resolve_structure(const std::string& arg);
// "name", "STRUCT/name", or a path to a module file over `base`.
GammaModule resolve_module(std::shared_ptr<const Semiring> base, const std::string& arg);

std::string read_text_file(const std::string& path);

}  // namespace tgw
