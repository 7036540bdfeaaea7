#pragma once

#include "phax/value.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace phax {

using Vertex = std::string;
// Strictly increasing vertex list; dimension = size - 1.
using Simplex = std::vector<Vertex>;

// Sorts and removes duplicate vertices.
Simplex make_simplex(std::vector<Vertex> vertices);
inline int dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }
// The face omitting position k.
Simplex facet(const Simplex& s, std::size_t k);
bool is_face(const Simplex& face, const Simplex& s);
std::string to_string(const Simplex& s);

class FilteredSet {
public:
  FilteredSet();

  // Rejects non-monotone or non-downward-closed input; INF entries are dropped.
  static FilteredSet validate(const std::map<Simplex, FiltValue>& raw,
                              const std::set<Vertex>& vertices);

  const std::set<Vertex>& vertices() const { return d_->vertices; }
  bool has_vertex(const Vertex& v) const { return d_->vertices.count(v) != 0; }
  // Finite values only.
  const std::map<Simplex, FiltValue>& support() const { return d_->support; }
  FiltValue value(const Simplex& s) const;
  // n-simplices with value <= eps, in canonical order.
  std::vector<Simplex> simplices(int n, const FiltValue& eps) const;
  std::vector<Simplex> complex_at(const FiltValue& eps) const;
  // Largest supported dimension; -1 when the support is empty.
  int dimension() const { return static_cast<int>(d_->by_dim.size()) - 1; }
  std::vector<FiltValue> critical_values() const;

  friend bool operator==(const FilteredSet& a, const FilteredSet& b) {
    return a.d_->vertices == b.d_->vertices && a.d_->support == b.d_->support;
  }
  friend bool operator!=(const FilteredSet& a, const FilteredSet& b) { return !(a == b); }

private:
  struct Data {
    std::set<Vertex> vertices;
    std::map<Simplex, FiltValue> support;
    std::vector<std::vector<std::pair<Simplex, FiltValue>>> by_dim;
  };
  std::shared_ptr<const Data> d_;
};

class RelativeFilteredPair {
public:
  RelativeFilteredPair() = default;
  // Requires sub vertices inside total and F_sub >= F_total on the sub support.
  static RelativeFilteredPair validate(FilteredSet total, FilteredSet sub);
  static RelativeFilteredPair absolute(FilteredSet total);

  const FilteredSet& total() const { return total_; }
  const FilteredSet& sub() const { return sub_; }
  int dimension() const { return total_.dimension(); }
  std::vector<FiltValue> critical_values() const;

  friend bool operator==(const RelativeFilteredPair& a, const RelativeFilteredPair& b) {
    return a.total_ == b.total_ && a.sub_ == b.sub_;
  }

private:
  FilteredSet total_;
  FilteredSet sub_;
};

struct Interval {
  FiltValue lo;
  FiltValue hi;

  // Throws InvalidInterval unless lo <= hi < INF.
  static Interval make(FiltValue lo, FiltValue hi);
  bool contains(const FiltValue& v) const { return lo <= v && v <= hi; }
  std::string str() const;
};

// {lo, hi} together with the critical values inside the interval, sorted.
std::vector<FiltValue> evaluation_levels(const Interval& I, const std::vector<FiltValue>& critical);
std::vector<FiltValue> merge_values(const std::vector<FiltValue>& a, const std::vector<FiltValue>& b);

using VertexMap = std::map<Vertex, Vertex>;

class PreservingMap {
public:
  const RelativeFilteredPair& domain() const { return domain_; }
  const RelativeFilteredPair& codomain() const { return codomain_; }
  const VertexMap& vertex_map() const { return map_; }
  const Vertex& operator()(const Vertex& v) const;
  // Image as a set (duplicates collapsed).
  Simplex image(const Simplex& s) const;

private:
  friend PreservingMap validate_map(VertexMap, RelativeFilteredPair, RelativeFilteredPair);
  RelativeFilteredPair domain_;
  RelativeFilteredPair codomain_;
  VertexMap map_;
};

PreservingMap validate_map(VertexMap vertex_map, RelativeFilteredPair domain,
                           RelativeFilteredPair codomain);
PreservingMap identity_map(const RelativeFilteredPair& pair);
// Identity on vertices from a pair into a larger one.
PreservingMap inclusion_map(const RelativeFilteredPair& from, const RelativeFilteredPair& to);
// f after g.
PreservingMap compose(const PreservingMap& f, const PreservingMap& g);

FilteredSet filtered_union(const FilteredSet& X, const FilteredSet& Y);
FilteredSet filtered_intersection(const FilteredSet& X, const FilteredSet& Y);
FilteredSet skeleton(const FilteredSet& X, int q);

// Vertex names used by the standard objects, in increasing order.
std::vector<Vertex> standard_vertices(int q);
// Every nonempty subset of the given vertices at alpha.
FilteredSet full_simplex(const std::vector<Vertex>& vertices, const FiltValue& alpha);
FilteredSet standard_simplex(int q, const FiltValue& alpha);
FilteredSet standard_boundary(int q, const FiltValue& alpha);
// Standard simplex with the top face and the face opposite omitted_vertex at INF.
FilteredSet closed_star(int q, const FiltValue& alpha, const Vertex& omitted_vertex);
FilteredSet point(const FiltValue& alpha, const Vertex& name = "p");

struct Cylinder {
  RelativeFilteredPair pair;
  PreservingMap h0;  // s -> s
  PreservingMap h1;  // s -> s'
  PreservingMap k;   // s, s' -> s
  std::map<Vertex, Vertex> primed;
};

Cylinder cylinder(const FilteredSet& X, const std::vector<Vertex>& order);
Cylinder cylinder(const RelativeFilteredPair& pair, const std::vector<Vertex>& order);

bool is_star_shaped(const FilteredSet& X, const Vertex& a, const Interval& I);

} // namespace phax
