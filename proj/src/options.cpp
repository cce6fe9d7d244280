#include "tgw/options.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "tgw/error.hpp"

namespace tgw {

namespace {

long long parse_number(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0) {
    throw ParseError("TGW_BUDGET: bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Budget Budget::parse(std::string_view text) {
  Budget b;
  if (text.empty()) return b;
  if (text.find('=') == std::string_view::npos) {
    b.subset_bound = static_cast<int>(parse_number(text));
    return b;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("TGW_BUDGET: expected key=value");
    const auto key = item.substr(0, eq);
    const auto value = parse_number(item.substr(eq + 1));
    if (key == "subset") {
      b.subset_bound = static_cast<int>(value);
    } else if (key == "maps") {
      b.map_budget = static_cast<std::size_t>(value);
    } else if (key == "states") {
      b.state_budget = static_cast<std::size_t>(value);
    } else if (key == "cap") {
      b.saturation_cap = static_cast<int>(value);
    } else {
      throw ParseError("TGW_BUDGET: unknown key '" + std::string(key) + "'");
    }
  }
  return b;
}

Budget Budget::from_environment() {
  const char* env = std::getenv("TGW_BUDGET");
  return env ? parse(env) : Budget{};
}

}  // namespace tgw
