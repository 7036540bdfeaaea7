#pragma once

#include "phax/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phax {

enum class AxiomId { A1, A2, A3, A4, A5, A6, A7, S1, S2, S3 };
std::string to_string(AxiomId id);
AxiomId parse_axiom(const std::string& s);
const std::vector<AxiomId>& all_axioms();

// The objects an axiom quantifies over. Only the fields the axiom uses need be set.
struct InstanceBundle {
  std::string name;
  std::optional<RelativeFilteredPair> pair;  // A1, A4, S2
  std::optional<PreservingMap> f;            // A2 (outer), A3, A5
  std::optional<PreservingMap> g;            // A2 (inner), A5
  std::optional<FilteredSet> x;              // A7: X', S1: X
  std::optional<FilteredSet> y;              // A7: A,  S1: Y
  std::optional<FiltValue> alpha;            // A6, S3
  std::optional<int> q;                      // S3
  std::vector<Interval> intervals;           // empty: every critical-value interval
  std::optional<int> n_max;
};

enum class Verdict { Pass, Fail, Skip };
std::string to_string(Verdict v);

struct Witness {
  std::string description;
  int degree = 0;
  std::optional<Interval> interval;
  Matrix expected;
  Matrix actual;
  std::optional<NodeCheck> node;  // for exactness failures
};

struct AxiomReport {
  AxiomId axiom;
  std::string instance;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::optional<Witness> witness;
  std::size_t checks = 0;  // number of (degree, interval) cases examined
};

AxiomReport verify_axiom(const Field& F, AxiomId id, const InstanceBundle& bundle);

} // namespace phax
