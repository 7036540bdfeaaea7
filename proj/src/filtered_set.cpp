#include "phax/filtered_set.hpp"

#include "phax/errors.hpp"

#include <algorithm>

namespace phax {

Simplex make_simplex(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

Simplex facet(const Simplex& s, std::size_t k) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != k) f.push_back(s[i]);
  return f;
}

bool is_face(const Simplex& face, const Simplex& s) {
  return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

FilteredSet::FilteredSet() : d_(std::make_shared<const Data>()) {}

FilteredSet FilteredSet::validate(const std::map<Simplex, FiltValue>& raw,
                                  const std::set<Vertex>& vertices) {
  auto data = std::make_shared<Data>();
  data->vertices = vertices;
  for (const auto& [s, v] : raw) {
    if (s.empty()) throw MissingFace("empty simplex key");
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      throw MalformedInstance("simplex " + to_string(s) + " is not strictly increasing");
    for (const auto& x : s)
      if (!vertices.count(x)) throw UnknownVertex(x + " in " + to_string(s));
    if (v.is_finite()) data->support.emplace(s, v);
  }
  for (const auto& [s, v] : data->support) {
    if (s.size() < 2) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex f = facet(s, k);
      auto it = data->support.find(f);
      if (it == data->support.end())
        throw MissingFace(to_string(f) + " (face of " + to_string(s) + ")");
      if (it->second > v)
        throw MonotonicityViolation(to_string(f) + "=" + it->second.str() + " > " +
                                    to_string(s) + "=" + v.str());
    }
  }
  for (const auto& [s, v] : data->support) {
    std::size_t d = s.size() - 1;
    if (data->by_dim.size() <= d) data->by_dim.resize(d + 1);
    data->by_dim[d].emplace_back(s, v);
  }
  FilteredSet out;
  out.d_ = std::move(data);
  return out;
}

FiltValue FilteredSet::value(const Simplex& s) const {
  auto it = d_->support.find(s);
  return it == d_->support.end() ? FiltValue::inf() : it->second;
}

std::vector<Simplex> FilteredSet::simplices(int n, const FiltValue& eps) const {
  std::vector<Simplex> out;
  if (n < 0 || n >= static_cast<int>(d_->by_dim.size())) return out;
  for (const auto& [s, v] : d_->by_dim[n])
    if (v <= eps) out.push_back(s);
  return out;
}

std::vector<Simplex> FilteredSet::complex_at(const FiltValue& eps) const {
  std::vector<Simplex> out;
  for (const auto& [s, v] : d_->support)
    if (v <= eps) out.push_back(s);
  return out;
}

std::vector<FiltValue> FilteredSet::critical_values() const {
  std::vector<FiltValue> out;
  for (const auto& [s, v] : d_->support) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

RelativeFilteredPair RelativeFilteredPair::validate(FilteredSet total, FilteredSet sub) {
  for (const auto& v : sub.vertices())
    if (!total.has_vertex(v)) throw InvalidPair("sub vertex " + v + " not in total");
  for (const auto& [s, v] : sub.support())
    if (v < total.value(s))
      throw InvalidPair("F_A(" + to_string(s) + ")=" + v.str() + " < F_X=" + total.value(s).str());
  RelativeFilteredPair p;
  p.total_ = std::move(total);
  p.sub_ = std::move(sub);
  return p;
}

RelativeFilteredPair RelativeFilteredPair::absolute(FilteredSet total) {
  RelativeFilteredPair p;
  p.total_ = std::move(total);
  return p;
}

std::vector<FiltValue> RelativeFilteredPair::critical_values() const {
  return merge_values(total_.critical_values(), sub_.critical_values());
}

Interval Interval::make(FiltValue lo, FiltValue hi) {
  if (hi.is_inf()) throw InvalidInterval("upper end must be finite");
  if (hi < lo) throw InvalidInterval("[" + lo.str() + "," + hi.str() + "] is reversed");
  return Interval{lo, hi};
}

std::string Interval::str() const { return "[" + lo.str() + "," + hi.str() + "]"; }

std::vector<FiltValue> merge_values(const std::vector<FiltValue>& a, const std::vector<FiltValue>& b) {
  std::vector<FiltValue> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FiltValue> evaluation_levels(const Interval& I, const std::vector<FiltValue>& critical) {
  std::vector<FiltValue> out{I.lo, I.hi};
  for (const auto& c : critical)
    if (I.contains(c)) out.push_back(c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

const Vertex& PreservingMap::operator()(const Vertex& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw UnknownVertex(v);
  return it->second;
}

Simplex PreservingMap::image(const Simplex& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back((*this)(v));
  return make_simplex(std::move(out));
}

PreservingMap validate_map(VertexMap vertex_map, RelativeFilteredPair domain,
                           RelativeFilteredPair codomain) {
  for (const auto& v : domain.total().vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw UnknownVertex("domain vertex " + v + " is not mapped");
    if (!codomain.total().has_vertex(it->second))
      throw UnknownVertex("image " + it->second + " of " + v + " is not a codomain vertex");
  }
  for (auto it = vertex_map.begin(); it != vertex_map.end();) {
    if (!domain.total().has_vertex(it->first))
      it = vertex_map.erase(it);
    else
      ++it;
  }
  PreservingMap f;
  f.map_ = std::move(vertex_map);
  for (const auto& v : domain.sub().vertices())
    if (!codomain.sub().has_vertex(f.map_.at(v)))
      throw SubNotMappedIntoSub(v + " -> " + f.map_.at(v));
  for (const auto& [s, v] : domain.total().support()) {
    Simplex t = f.image(s);
    if (codomain.total().value(t) > v)
      throw NotFiltrationPreserving(to_string(s) + "=" + v.str() + " maps to " + to_string(t) +
                                    "=" + codomain.total().value(t).str());
  }
  for (const auto& [s, v] : domain.sub().support()) {
    Simplex t = f.image(s);
    if (codomain.sub().value(t) > v)
      throw NotFiltrationPreserving("sub " + to_string(s) + "=" + v.str() + " maps to " +
                                    to_string(t) + "=" + codomain.sub().value(t).str());
  }
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  return f;
}

PreservingMap identity_map(const RelativeFilteredPair& pair) { return inclusion_map(pair, pair); }

PreservingMap inclusion_map(const RelativeFilteredPair& from, const RelativeFilteredPair& to) {
  VertexMap m;
  for (const auto& v : from.total().vertices()) m.emplace(v, v);
  return validate_map(std::move(m), from, to);
}

PreservingMap compose(const PreservingMap& f, const PreservingMap& g) {
  if (!(g.codomain() == f.domain())) throw MalformedInstance("compose: g's codomain is not f's domain");
  VertexMap m;
  for (const auto& [v, w] : g.vertex_map()) m.emplace(v, f(w));
  return validate_map(std::move(m), g.domain(), f.codomain());
}

// ---------------------------------------------------------------------------

namespace {

bool within(const Simplex& s, const std::set<Vertex>& vs) {
  for (const auto& v : s)
    if (!vs.count(v)) return false;
  return true;
}

} // namespace

FilteredSet filtered_union(const FilteredSet& X, const FilteredSet& Y) {
  std::set<Vertex> vs = X.vertices();
  vs.insert(Y.vertices().begin(), Y.vertices().end());
  std::map<Simplex, FiltValue> raw;
  for (const auto& [s, v] : X.support()) raw[s] = within(s, Y.vertices()) ? min(v, Y.value(s)) : v;
  for (const auto& [s, v] : Y.support()) {
    if (raw.count(s)) continue;
    raw[s] = within(s, X.vertices()) ? min(v, X.value(s)) : v;
  }
  return FilteredSet::validate(raw, vs);
}

FilteredSet filtered_intersection(const FilteredSet& X, const FilteredSet& Y) {
  std::set<Vertex> vs;
  std::set_intersection(X.vertices().begin(), X.vertices().end(), Y.vertices().begin(),
                        Y.vertices().end(), std::inserter(vs, vs.end()));
  std::map<Simplex, FiltValue> raw;
  for (const auto& [s, v] : X.support()) {
    FiltValue w = Y.value(s);
    if (w.is_finite()) raw[s] = max(v, w);
  }
  return FilteredSet::validate(raw, vs);
}

FilteredSet skeleton(const FilteredSet& X, int q) {
  std::map<Simplex, FiltValue> raw;
  for (const auto& [s, v] : X.support())
    if (dim(s) <= q) raw.emplace(s, v);
  return FilteredSet::validate(raw, X.vertices());
}

std::vector<Vertex> standard_vertices(int q) {
  std::size_t width = std::to_string(q).size();
  std::vector<Vertex> out;
  for (int i = 0; i <= q; ++i) {
    std::string s = std::to_string(i);
    out.push_back(std::string(width - s.size(), '0') + s);
  }
  return out;
}

FilteredSet full_simplex(const std::vector<Vertex>& vertices, const FiltValue& alpha) {
  Simplex top = make_simplex(vertices);
  std::map<Simplex, FiltValue> raw;
  const std::size_t n = top.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Simplex s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(top[i]);
    raw.emplace(std::move(s), alpha);
  }
  return FilteredSet::validate(raw, std::set<Vertex>(top.begin(), top.end()));
}

FilteredSet standard_simplex(int q, const FiltValue& alpha) {
  return full_simplex(standard_vertices(q), alpha);
}

FilteredSet standard_boundary(int q, const FiltValue& alpha) {
  auto S = standard_simplex(q, alpha);
  auto raw = S.support();
  raw.erase(make_simplex(standard_vertices(q)));
  return FilteredSet::validate(raw, S.vertices());
}

FilteredSet closed_star(int q, const FiltValue& alpha, const Vertex& omitted_vertex) {
  auto S = standard_simplex(q, alpha);
  if (!S.has_vertex(omitted_vertex)) throw UnknownVertex(omitted_vertex);
  Simplex top = make_simplex(standard_vertices(q));
  Simplex opposite;
  for (const auto& v : top)
    if (v != omitted_vertex) opposite.push_back(v);
  auto raw = S.support();
  raw.erase(top);
  raw.erase(opposite);
  return FilteredSet::validate(raw, S.vertices());
}

FilteredSet point(const FiltValue& alpha, const Vertex& name) { return full_simplex({name}, alpha); }

// ---------------------------------------------------------------------------

namespace {

// Values of staircase faces: every subset of (s'_1..s'_j, s_j..s_k) gets F(collapse).
std::map<Simplex, FiltValue> staircase_values(const FilteredSet& X,
                                              const std::map<Vertex, std::size_t>& rank,
                                              const std::map<Vertex, Vertex>& primed) {
  std::map<Simplex, FiltValue> raw;
  for (const auto& [s, v] : X.support()) {
    std::vector<Vertex> ordered(s);
    std::sort(ordered.begin(), ordered.end(),
              [&](const Vertex& a, const Vertex& b) { return rank.at(a) < rank.at(b); });
    const std::size_t k = ordered.size();
    for (std::size_t j = 0; j < k; ++j) {
      // Entry i < j+1 is primed; entries j..k-1 unprimed.
      std::vector<Vertex> prism;
      std::vector<Vertex> base;
      for (std::size_t i = 0; i <= j; ++i) {
        prism.push_back(primed.at(ordered[i]));
        base.push_back(ordered[i]);
      }
      for (std::size_t i = j; i < k; ++i) {
        prism.push_back(ordered[i]);
        base.push_back(ordered[i]);
      }
      const std::size_t n = prism.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Vertex> t, c;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) {
            t.push_back(prism[i]);
            c.push_back(base[i]);
          }
        Simplex ts = make_simplex(std::move(t));
        if (raw.count(ts)) continue;
        raw.emplace(std::move(ts), X.value(make_simplex(std::move(c))));
      }
    }
  }
  return raw;
}

} // namespace

Cylinder cylinder(const FilteredSet& X, const std::vector<Vertex>& order) {
  return cylinder(RelativeFilteredPair::absolute(X), order);
}

Cylinder cylinder(const RelativeFilteredPair& pair, const std::vector<Vertex>& order) {
  const FilteredSet& X = pair.total();
  const FilteredSet& A = pair.sub();
  std::map<Vertex, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
  for (const auto& v : X.vertices())
    if (!rank.count(v)) throw UnknownVertex("order does not cover vertex " + v);
  if (rank.size() != order.size() || order.size() != X.vertices().size())
    throw MalformedInstance("order must list each vertex exactly once");

  Cylinder c;
  for (const auto& v : X.vertices()) {
    Vertex p = v + "'";
    while (X.has_vertex(p)) p += "'";
    c.primed.emplace(v, p);
  }
  std::set<Vertex> xv = X.vertices(), av = A.vertices();
  for (const auto& v : X.vertices()) xv.insert(c.primed.at(v));
  for (const auto& v : A.vertices()) av.insert(c.primed.at(v));
  auto Xc = FilteredSet::validate(staircase_values(X, rank, c.primed), xv);
  auto Ac = FilteredSet::validate(staircase_values(A, rank, c.primed), av);
  c.pair = RelativeFilteredPair::validate(Xc, Ac);

  VertexMap h0, h1, k;
  for (const auto& v : X.vertices()) {
    h0.emplace(v, v);
    h1.emplace(v, c.primed.at(v));
    k.emplace(v, v);
    k.emplace(c.primed.at(v), v);
  }
  c.h0 = validate_map(h0, pair, c.pair);
  c.h1 = validate_map(h1, pair, c.pair);
  c.k = validate_map(k, c.pair, pair);
  return c;
}

bool is_star_shaped(const FilteredSet& X, const Vertex& a, const Interval& I) {
  if (!X.has_vertex(a)) throw UnknownVertex(a);
  for (const auto& alpha : evaluation_levels(I, X.critical_values())) {
    for (const auto& s : X.complex_at(alpha)) {
      Simplex t = s;
      t.push_back(a);
      if (X.value(make_simplex(std::move(t))) > alpha) return false;
    }
  }
  return true;
}

} // namespace phax
