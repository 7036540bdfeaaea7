#pragma once

#include "phax/filtered_set.hpp"

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace phax {

// Text format: one simplex per line, "<value> <v0> ... <vk>", value a rational ("3",
// "1/2") or "inf"; '#' starts a comment. "[Name]" starts a named section; lines before the
// first header belong to section "X".
std::map<std::string, FilteredSet> parse_sections(std::istream& in, const std::string& source);
std::map<std::string, FilteredSet> parse_sections_file(const std::string& path);

FilteredSet parse_filtration(std::istream& in, const std::string& source = "<input>");
FilteredSet parse_filtration_file(const std::string& path);
// Sections [X] and optional [A]; a file without headers is an absolute pair.
RelativeFilteredPair parse_pair(std::istream& in, const std::string& source = "<input>");
RelativeFilteredPair parse_pair_file(const std::string& path);
// "domain: <path>", "codomain: <path>", then "<v> -> <w>" lines. Relative paths are
// resolved against the map file's directory.
PreservingMap parse_map_file(const std::string& path);

// Canonical text: simplices by dimension, then lexicographically; isolated unsupported
// vertices are written as "inf v".
std::string serialize(const FilteredSet& X);
std::string serialize(const RelativeFilteredPair& pair);

// Parses "E,E'" into an interval.
Interval parse_interval(const std::string& text);

} // namespace phax
