#include "phax/fuzz.hpp"

#include "phax/errors.hpp"
#include "phax/sequences.hpp"

#include <algorithm>

namespace phax {

namespace {

std::vector<Vertex> pool(int n) {
  std::vector<Vertex> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

std::vector<Simplex> all_faces(const Simplex& s) {
  std::vector<Simplex> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << s.size()); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask >> i & 1) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

// Monotone values: each simplex gets the max of its facets and a random palette value,
// never below floor(s).
template <class Floor>
std::map<Simplex, FiltValue> assign_values(Rng& rng, const std::set<Simplex>& support, Floor floor) {
  std::vector<Simplex> order(support.begin(), support.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  std::map<Simplex, FiltValue> raw;
  for (const auto& s : order) {
    FiltValue v = max(rng.pick(fuzz_palette()), floor(s));
    if (s.size() > 1)
      for (std::size_t k = 0; k < s.size(); ++k) v = max(v, raw.at(facet(s, k)));
    raw.emplace(s, v);
  }
  return raw;
}

} // namespace

const std::vector<FiltValue>& fuzz_palette() {
  static const std::vector<FiltValue> p{FiltValue(0), FiltValue(1, 2), FiltValue(1), FiltValue(2)};
  return p;
}

FilteredSet random_filtered_set(Rng& rng, const FuzzShape& shape) {
  const int nv = shape.min_vertices +
                 static_cast<int>(rng.below(static_cast<std::uint64_t>(shape.max_vertices - shape.min_vertices + 1)));
  auto vs = pool(nv);
  std::set<Simplex> support;
  const int target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(shape.max_simplices)));
  for (int attempt = 0; attempt < 40 && static_cast<int>(support.size()) < target; ++attempt) {
    std::size_t size = 1 + rng.below(static_cast<std::uint64_t>(std::min(shape.max_simplex_size, nv)));
    std::vector<Vertex> pickv = vs;
    for (std::size_t i = 0; i + 1 < pickv.size(); ++i)
      std::swap(pickv[i], pickv[i + rng.below(pickv.size() - i)]);
    pickv.resize(size);
    std::set<Simplex> next = support;
    for (auto& f : all_faces(make_simplex(pickv))) next.insert(std::move(f));
    if (static_cast<int>(next.size()) <= shape.max_simplices) support = std::move(next);
  }
  auto raw = assign_values(rng, support, [](const Simplex&) { return FiltValue(0); });
  return FilteredSet::validate(raw, std::set<Vertex>(vs.begin(), vs.end()));
}

FilteredSet random_subset(Rng& rng, const FilteredSet& X) {
  std::set<Simplex> support;
  for (const auto& [s, v] : X.support())
    if (rng.chance(1, 3))
      for (auto& f : all_faces(s)) support.insert(std::move(f));
  auto raw = assign_values(rng, support, [&](const Simplex& s) { return X.value(s); });
  std::set<Vertex> vs;
  for (const auto& s : support) vs.insert(s.begin(), s.end());
  return FilteredSet::validate(raw, vs);
}

RelativeFilteredPair random_pair(Rng& rng, const FuzzShape& shape) {
  FilteredSet X = random_filtered_set(rng, shape);
  FilteredSet A = random_subset(rng, X);
  return RelativeFilteredPair::validate(X, A);
}

Vertex fresh_vertex(const FilteredSet& X, const std::string& stem) {
  Vertex v = stem;
  for (int i = 0; X.has_vertex(v); ++i) v = stem + std::to_string(i);
  return v;
}

RelativeFilteredPair cone_pair(const RelativeFilteredPair& pair, const Vertex& apex) {
  auto cone = [&](const FilteredSet& S, const FiltValue& apex_value) {
    std::map<Simplex, FiltValue> raw = S.support();
    for (const auto& [s, v] : S.support()) {
      Simplex t = s;
      t.push_back(apex);
      raw.emplace(make_simplex(std::move(t)), v);
    }
    raw.emplace(Simplex{apex}, apex_value);
    std::set<Vertex> vs = S.vertices();
    vs.insert(apex);
    return FilteredSet::validate(raw, vs);
  };
  auto crit = pair.total().critical_values();
  FiltValue base = crit.empty() ? FiltValue(0) : crit.front();
  FilteredSet Y = cone(pair.total(), base);
  FilteredSet B = pair.sub().support().empty() ? FilteredSet() : cone(pair.sub(), base);
  return RelativeFilteredPair::validate(Y, B);
}

PreservingMap random_map(Rng& rng, const RelativeFilteredPair& pair) {
  const auto& vs = pair.total().vertices();
  std::vector<Vertex> list(vs.begin(), vs.end());
  if (rng.chance(1, 2) && !list.empty()) {
    for (int attempt = 0; attempt < 12; ++attempt) {
      VertexMap m;
      for (const auto& v : list) m.emplace(v, rng.chance(1, 3) ? rng.pick(list) : v);
      try {
        return validate_map(m, pair, pair);
      } catch (const Error&) {
      }
    }
  }
  Vertex apex = fresh_vertex(pair.total());
  auto cone = cone_pair(pair, apex);
  VertexMap m;
  for (const auto& v : list) m.emplace(v, rng.chance(1, 3) ? apex : v);
  return validate_map(m, pair, cone);
}

MapPair random_contiguous_pair(Rng& rng, const RelativeFilteredPair& pair) {
  const auto& vs = pair.total().vertices();
  std::vector<Vertex> list(vs.begin(), vs.end());
  // Self maps first: differ from the identity at a few vertices.
  for (int attempt = 0; attempt < 20; ++attempt) {
    VertexMap a, b;
    for (const auto& v : list) {
      a.emplace(v, rng.chance(1, 4) ? rng.pick(list) : v);
      b.emplace(v, rng.chance(1, 4) ? rng.pick(list) : v);
    }
    try {
      auto f = validate_map(a, pair, pair);
      auto g = validate_map(b, pair, pair);
      if (a != b && are_contiguous(f, g)) return MapPair{f, g};
    } catch (const Error&) {
    }
  }
  // Collapses onto a cone apex are always contiguous to each other.
  Vertex apex = fresh_vertex(pair.total());
  auto cone = cone_pair(pair, apex);
  VertexMap a, b;
  for (const auto& v : list) {
    a.emplace(v, rng.chance(1, 3) ? apex : v);
    b.emplace(v, rng.chance(1, 2) ? apex : v);
  }
  return MapPair{validate_map(a, pair, cone), validate_map(b, pair, cone)};
}

ExcisionConfig random_excision(Rng& rng, const FuzzShape& shape) {
  FuzzShape half = shape;
  half.max_simplices = std::max(1, shape.max_simplices / 2);
  ExcisionConfig c{random_filtered_set(rng, half), random_filtered_set(rng, half)};
  return c;
}

std::vector<Vertex> random_order(Rng& rng, const FilteredSet& X) {
  std::vector<Vertex> out(X.vertices().begin(), X.vertices().end());
  for (std::size_t i = 0; i + 1 < out.size(); ++i) std::swap(out[i], out[i + rng.below(out.size() - i)]);
  return out;
}

} // namespace phax
