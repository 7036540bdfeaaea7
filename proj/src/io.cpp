#include "phax/io.hpp"

#include "phax/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace phax {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string where(const std::string& source, int line) {
  return source + ":" + std::to_string(line) + ": ";
}

struct Section {
  std::map<Simplex, FiltValue> raw;
  std::map<Simplex, int> line_of;
  std::set<Vertex> vertices;
  std::vector<Simplex> order;
};

FilteredSet finish(const Section& s, const std::string& source) {
  // Checked in file order so errors point at the offending line.
  for (const auto& simplex : s.order) {
    const FiltValue& v = s.raw.at(simplex);
    if (v.is_inf() || simplex.size() < 2) continue;
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      Simplex f = facet(simplex, k);
      auto it = s.raw.find(f);
      if (it == s.raw.end() || it->second.is_inf())
        throw MissingFace(where(source, s.line_of.at(simplex)) + to_string(f) + " (face of " +
                          to_string(simplex) + ")");
      if (it->second > v)
        throw MonotonicityViolation(where(source, s.line_of.at(simplex)) + to_string(f) + "=" +
                                    it->second.str() + " > " + to_string(simplex) + "=" + v.str());
    }
  }
  return FilteredSet::validate(s.raw, s.vertices);
}

std::map<std::string, FilteredSet> read_sections(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_sections(in, path);
}

} // namespace

std::map<std::string, FilteredSet> parse_sections(std::istream& in, const std::string& source) {
  std::map<std::string, Section> sections;
  std::vector<std::string> names;
  std::string current = "X";
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ParseError(where(source, lineno) + "bad section header");
      current = strip(line.substr(1, line.size() - 2));
      if (sections.count(current)) throw ParseError(where(source, lineno) + "duplicate section [" + current + "]");
      sections[current];
      continue;
    }
    std::istringstream ls(line);
    std::string value_text;
    ls >> value_text;
    FiltValue value;
    try {
      value = FiltValue::parse(value_text);
    } catch (const std::invalid_argument&) {
      throw ParseError(where(source, lineno) + "bad value '" + value_text + "'");
    }
    std::vector<Vertex> vs;
    for (std::string v; ls >> v;) vs.push_back(v);
    if (vs.empty()) throw ParseError(where(source, lineno) + "simplex has no vertices");
    Simplex s = make_simplex(vs);
    if (s.size() != vs.size()) throw ParseError(where(source, lineno) + "repeated vertex");
    Section& sec = sections[current];
    if (sec.raw.count(s)) throw ParseError(where(source, lineno) + "duplicate simplex " + to_string(s));
    sec.raw.emplace(s, value);
    sec.line_of.emplace(s, lineno);
    sec.order.push_back(s);
    sec.vertices.insert(s.begin(), s.end());
  }
  std::map<std::string, FilteredSet> out;
  for (const auto& [name, sec] : sections) out.emplace(name, finish(sec, source + " [" + name + "]"));
  if (out.empty()) out.emplace("X", FilteredSet());
  return out;
}

std::map<std::string, FilteredSet> parse_sections_file(const std::string& path) { return read_sections(path); }

FilteredSet parse_filtration(std::istream& in, const std::string& source) {
  auto s = parse_sections(in, source);
  if (s.size() != 1 || !s.count("X")) throw ParseError(source + ": expected a single filtration");
  return s.at("X");
}

FilteredSet parse_filtration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_filtration(in, path);
}

namespace {

RelativeFilteredPair pair_from(const std::map<std::string, FilteredSet>& s, const std::string& source) {
  for (const auto& [name, X] : s)
    if (name != "X" && name != "A") throw ParseError(source + ": unexpected section [" + name + "]");
  if (!s.count("X")) throw ParseError(source + ": missing [X] section");
  auto it = s.find("A");
  try {
    return RelativeFilteredPair::validate(s.at("X"), it == s.end() ? FilteredSet() : it->second);
  } catch (const InvalidPair& e) {
    throw InvalidPair(source + ": " + e.what());
  }
}

} // namespace

RelativeFilteredPair parse_pair(std::istream& in, const std::string& source) {
  return pair_from(parse_sections(in, source), source);
}

RelativeFilteredPair parse_pair_file(const std::string& path) { return pair_from(read_sections(path), path); }

PreservingMap parse_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const auto dir = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return (fp.is_absolute() ? fp : dir / fp).string();
  };
  std::string domain, codomain, line;
  VertexMap m;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.rfind("domain:", 0) == 0) {
      domain = resolve(strip(line.substr(7)));
    } else if (line.rfind("codomain:", 0) == 0) {
      codomain = resolve(strip(line.substr(9)));
    } else {
      auto arrow = line.find("->");
      if (arrow == std::string::npos) throw ParseError(where(path, lineno) + "expected '<v> -> <w>'");
      std::string v = strip(line.substr(0, arrow)), w = strip(line.substr(arrow + 2));
      if (v.empty() || w.empty()) throw ParseError(where(path, lineno) + "empty vertex name");
      if (!m.emplace(v, w).second) throw ParseError(where(path, lineno) + "vertex " + v + " mapped twice");
    }
  }
  if (domain.empty() || codomain.empty()) throw ParseError(path + ": missing domain or codomain header");
  return validate_map(m, parse_pair_file(domain), parse_pair_file(codomain));
}

std::string serialize(const FilteredSet& X) {
  std::vector<std::pair<Simplex, FiltValue>> items(X.support().begin(), X.support().end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::set<Vertex> covered;
  for (const auto& [s, v] : items) covered.insert(s.begin(), s.end());
  std::ostringstream os;
  for (const auto& v : X.vertices())
    if (!covered.count(v)) os << "inf " << v << '\n';
  for (const auto& [s, v] : items) {
    os << v.str();
    for (const auto& x : s) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

std::string serialize(const RelativeFilteredPair& pair) {
  std::string out = "[X]\n" + serialize(pair.total());
  out += "[A]\n" + serialize(pair.sub());
  return out;
}

Interval parse_interval(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("interval must be 'E,E''");
  try {
    return Interval::make(FiltValue::parse(strip(text.substr(0, comma))),
                          FiltValue::parse(strip(text.substr(comma + 1))));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("interval: ") + e.what());
  }
}

} // namespace phax
