#include "promonad/kvmap.hpp"

namespace promonad {

bool representable(std::string_view s) {
  return s.find_first_of("=\n\r") == std::string_view::npos;
}

std::optional<KvMap> parse_kvmap(std::string_view content) {
  KvMap m;
  while (!content.empty()) {
    auto eol = content.find('\n');
    auto line = content.substr(0, eol);
    content.remove_prefix(eol == std::string_view::npos ? content.size() : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    auto key = line.substr(0, eq);
    auto value = line.substr(eq + 1);
    if (value.find('=') != std::string_view::npos) return std::nullopt;
    if (!m.emplace(std::string(key), std::string(value)).second) return std::nullopt;
  }
  return m;
}

std::optional<std::string> format_kvmap(const KvMap& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!representable(k) || !representable(v)) return std::nullopt;
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace promonad
