#pragma once

// Human-readable rendering of values for counterexample reports.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "promonad/text.hpp"

namespace promonad {

inline std::string describe(bool b) { return b ? "true" : "false"; }
inline std::string describe(int n) { return std::to_string(n); }
inline std::string describe(long n) { return std::to_string(n); }
inline std::string describe(long long n) { return std::to_string(n); }
inline std::string describe(unsigned long n) { return std::to_string(n); }
inline std::string describe(unsigned long long n) { return std::to_string(n); }
inline std::string describe(const std::string& s) { return '"' + s + '"'; }
inline std::string describe(const Text& s) { return '"' + to_utf8(s) + '"'; }
inline std::string describe(char32_t c) { return '\'' + to_utf8(Text(1, c)) + '\''; }

template <class T>
std::string describe(const std::optional<T>& o);
template <class A, class B>
std::string describe(const std::pair<A, B>& p);
template <class T>
std::string describe(const std::vector<T>& v);
template <class K, class V>
std::string describe(const std::map<K, V>& m);

template <class T>
std::string describe(const std::optional<T>& o) {
  return o ? "some(" + describe(*o) + ")" : "none";
}

template <class A, class B>
std::string describe(const std::pair<A, B>& p) {
  return "(" + describe(p.first) + ", " + describe(p.second) + ")";
}

template <class T>
std::string describe(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += describe(v[i]);
  }
  return out + "]";
}

template <class K, class V>
std::string describe(const std::map<K, V>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) out += ", ";
    first = false;
    out += describe(k) + "->" + describe(v);
  }
  return out + "}";
}

}  // namespace promonad
