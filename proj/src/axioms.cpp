#include "phax/axioms.hpp"

#include "phax/errors.hpp"

#include <algorithm>

namespace phax {

std::string to_string(AxiomId id) {
  static const char* names[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "S1", "S2", "S3"};
  return names[static_cast<int>(id)];
}

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> ids{AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4,
                                        AxiomId::A5, AxiomId::A6, AxiomId::A7, AxiomId::S1,
                                        AxiomId::S2, AxiomId::S3};
  return ids;
}

AxiomId parse_axiom(const std::string& s) {
  for (auto id : all_axioms())
    if (to_string(id) == s) return id;
  throw MalformedInstance("unknown axiom " + s);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

namespace {

RelativeFilteredPair absolute(const FilteredSet& X) { return RelativeFilteredPair::absolute(X); }

template <class T>
const T& need(const std::optional<T>& v, const char* what, AxiomId id) {
  if (!v) throw MalformedInstance(to_string(id) + " needs " + what);
  return *v;
}

std::vector<Interval> intervals_for(const InstanceBundle& b, std::vector<FiltValue> crit) {
  if (!b.intervals.empty()) return b.intervals;
  if (crit.empty()) crit.push_back(FiltValue(0));
  return critical_intervals(crit);
}

void fail(AxiomReport& r, std::string what, int n, const Interval& I, Matrix expected, Matrix actual) {
  if (r.verdict == Verdict::Fail) return;
  r.verdict = Verdict::Fail;
  r.witness = Witness{std::move(what), n, I, std::move(expected), std::move(actual), std::nullopt};
}

void check_iso(const Field& F, AxiomReport& r, const PreservingMap& k, const std::vector<Interval>& ivs,
               int top) {
  for (const auto& I : ivs)
    for (int n = 0; n <= top; ++n) {
      ++r.checks;
      Matrix m = induced_map(F, k, n, I).matrix;
      if (!is_invertible(F, m)) fail(r, "inclusion is not an isomorphism", n, I, Matrix::identity(m.cols()), m);
    }
}

void check_exactness(const Field& F, AxiomReport& r, const RelativeFilteredPair& pair,
                     const std::vector<Interval>& ivs, std::optional<int> n_max) {
  for (const auto& I : ivs) {
    ++r.checks;
    ExactSequence seq = les_pair(F, pair, I, n_max);
    auto rep = check_exact(F, seq);
    if (rep.exact || r.verdict == Verdict::Fail) continue;
    for (const auto& c : rep.nodes)
      if (c.failure != ExactnessFailure::None) {
        r.verdict = Verdict::Fail;
        r.witness = Witness{"sequence not exact at " + seq.nodes[c.node].label, 0, I, Matrix(), Matrix(), c};
        break;
      }
  }
}

PreservingMap restrict_to_sub(const PreservingMap& f) {
  VertexMap m;
  for (const auto& v : f.domain().sub().vertices()) m.emplace(v, f(v));
  return validate_map(m, absolute(f.domain().sub()), absolute(f.codomain().sub()));
}

} // namespace

AxiomReport verify_axiom(const Field& F, AxiomId id, const InstanceBundle& b) {
  AxiomReport r;
  r.axiom = id;
  r.instance = b.name;
  switch (id) {
    case AxiomId::A1: {
      const auto& P = need(b.pair, "a pair", id);
      auto idm = identity_map(P);
      int top = b.n_max.value_or(default_n_max(P));
      for (const auto& I : intervals_for(b, P.critical_values()))
        for (int n = 0; n <= top; ++n) {
          ++r.checks;
          Matrix m = induced_map(F, idm, n, I).matrix;
          if (m != Matrix::identity(m.cols())) fail(r, "identity does not induce the identity", n, I, Matrix::identity(m.cols()), m);
        }
      break;
    }
    case AxiomId::A2: {
      const auto& f = need(b.f, "an outer map f", id);
      const auto& g = need(b.g, "an inner map g", id);
      auto fg = compose(f, g);
      int top = b.n_max.value_or(default_n_max(g.domain()));
      auto crit = merge_values(g.domain().critical_values(),
                               merge_values(f.domain().critical_values(), f.codomain().critical_values()));
      for (const auto& I : intervals_for(b, crit))
        for (int n = 0; n <= top; ++n) {
          ++r.checks;
          GroupPtr H0 = homology(F, g.domain(), n, I), H1 = homology(F, f.domain(), n, I),
                   H2 = homology(F, f.codomain(), n, I);
          Matrix lhs = induced_map(fg, H0, H2).matrix;
          Matrix rhs = multiply(F, induced_map(f, H1, H2).matrix, induced_map(g, H0, H1).matrix);
          if (lhs != rhs) fail(r, "(f.g)_* differs from f_* g_*", n, I, rhs, lhs);
        }
      break;
    }
    case AxiomId::A3: {
      const auto& f = need(b.f, "a map f", id);
      auto fa = restrict_to_sub(f);
      int top = b.n_max.value_or(default_n_max(f.domain()));
      auto crit = merge_values(f.domain().critical_values(), f.codomain().critical_values());
      for (const auto& I : intervals_for(b, crit))
        for (int n = 1; n <= top; ++n) {
          ++r.checks;
          GroupPtr HX = homology(F, f.domain(), n, I), HY = homology(F, f.codomain(), n, I);
          GroupPtr HA = homology(F, fa.domain(), n - 1, I), HB = homology(F, fa.codomain(), n - 1, I);
          Matrix lhs = multiply(F, induced_map(fa, HA, HB).matrix, connecting(HX, HA).matrix);
          Matrix rhs = multiply(F, connecting(HY, HB).matrix, induced_map(f, HX, HY).matrix);
          if (lhs != rhs) fail(r, "boundary is not natural", n, I, rhs, lhs);
        }
      break;
    }
    case AxiomId::A4:
    case AxiomId::S2: {
      const auto& P = need(b.pair, "a pair", id);
      check_exactness(F, r, P, intervals_for(b, P.critical_values()), b.n_max);
      break;
    }
    case AxiomId::A5: {
      const auto& f = need(b.f, "a map f", id);
      const auto& g = need(b.g, "a map g", id);
      int top = b.n_max.value_or(default_n_max(f.domain()));
      auto crit = merge_values(f.domain().critical_values(), f.codomain().critical_values());
      std::size_t applicable = 0;
      for (const auto& I : intervals_for(b, crit)) {
        if (!are_contiguous(f, g, I)) continue;
        ++applicable;
        for (int n = 0; n <= top; ++n) {
          ++r.checks;
          GroupPtr H = homology(F, f.domain(), n, I), K = homology(F, f.codomain(), n, I);
          Matrix mf = induced_map(f, H, K).matrix, mg = induced_map(g, H, K).matrix;
          if (mf != mg) fail(r, "contiguous maps induce different maps", n, I, mf, mg);
        }
      }
      if (applicable == 0) {
        r.verdict = Verdict::Skip;
        r.detail = "maps are not contiguous on any interval";
      }
      break;
    }
    case AxiomId::A6: {
      const auto& alpha = need(b.alpha, "alpha", id);
      auto P = absolute(point(alpha));
      int top = b.n_max.value_or(2);
      for (const auto& I : intervals_for(b, {alpha}))
        for (int n = 0; n <= top; ++n) {
          ++r.checks;
          std::size_t want = (n == 0 && I.lo >= alpha) ? 1 : 0;
          std::size_t got = homology(F, P, n, I)->dim();
          if (got != want) fail(r, "point dimension " + std::to_string(got) + " != " + std::to_string(want), n, I, Matrix(want, 0), Matrix(got, 0));
        }
      break;
    }
    case AxiomId::A7: {
      const auto& Xp = need(b.x, "X'", id);
      const auto& A = need(b.y, "A", id);
      FilteredSet X = filtered_union(Xp, A);
      auto small = RelativeFilteredPair::validate(Xp, filtered_intersection(Xp, A));
      auto big = RelativeFilteredPair::validate(X, A);
      int top = b.n_max.value_or(default_n_max(big));
      check_iso(F, r, inclusion_map(small, big), intervals_for(b, big.critical_values()), top);
      break;
    }
    case AxiomId::S1: {
      const auto& X = need(b.x, "X", id);
      const auto& Y = need(b.y, "Y", id);
      auto from = RelativeFilteredPair::validate(X, filtered_intersection(X, Y));
      auto to = RelativeFilteredPair::validate(filtered_union(X, Y), Y);
      int top = b.n_max.value_or(default_n_max(to));
      check_iso(F, r, inclusion_map(from, to), intervals_for(b, to.critical_values()), top);
      break;
    }
    case AxiomId::S3: {
      const int q = need(b.q, "q", id);
      const auto& alpha = need(b.alpha, "alpha", id);
      auto S = absolute(standard_simplex(q, alpha));
      int top = b.n_max.value_or(q + 1);
      for (const auto& I : intervals_for(b, {alpha}))
        for (int n = 0; n <= top; ++n) {
          ++r.checks;
          std::size_t want = (n == 0 && I.lo >= alpha) ? 1 : 0;
          std::size_t got = homology(F, S, n, I)->dim();
          if (got != want) fail(r, "simplex dimension " + std::to_string(got) + " != " + std::to_string(want), n, I, Matrix(want, 0), Matrix(got, 0));
        }
      break;
    }
  }
  if (r.verdict == Verdict::Fail && r.witness) {
    r.detail = r.witness->description + " (degree " + std::to_string(r.witness->degree) +
               (r.witness->interval ? ", " + r.witness->interval->str() : std::string()) + ")";
  }
  return r;
}

} // namespace phax
