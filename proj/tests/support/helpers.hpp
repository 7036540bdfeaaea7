#pragma once

#include "phax/filtered_set.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace testing_helpers {

using phax::FiltValue;
using phax::Simplex;

// Builds a filtered set from {vertex list, value} entries; vertices are collected.
inline phax::FilteredSet make_set(const std::vector<std::pair<std::vector<std::string>, FiltValue>>& entries,
                                  std::set<std::string> extra_vertices = {}) {
  std::map<Simplex, FiltValue> raw;
  for (const auto& [vs, v] : entries) {
    raw[phax::make_simplex(vs)] = v;
    extra_vertices.insert(vs.begin(), vs.end());
  }
  return phax::FilteredSet::validate(raw, extra_vertices);
}

// Hollow triangle: vertices at 0, edges at 1, no 2-face.
inline phax::FilteredSet triangle_boundary() {
  return make_set({{{"a"}, 0}, {{"b"}, 0}, {{"c"}, 0}, {{"a", "b"}, 1}, {{"b", "c"}, 1}, {{"a", "c"}, 1}});
}

inline FiltValue half() { return FiltValue(1, 2); }

}  // namespace testing_helpers
