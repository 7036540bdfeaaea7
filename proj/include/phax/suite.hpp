#pragma once

#include "phax/axioms.hpp"
#include "phax/fuzz.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace phax {

struct SuiteCase {
  AxiomId axiom;
  InstanceBundle bundle;
};

// One case per axiom, built around the given pair with maps and side objects drawn from rng.
std::vector<SuiteCase> cases_for_pair(Rng& rng, const RelativeFilteredPair& pair, const std::string& name);
// count random instances; instance i uses its own stream derived from seed.
std::vector<SuiteCase> fuzz_cases(std::uint64_t seed, int count);
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

// 64-bit FNV-1a, as 16 hex digits.
std::string instance_hash(const std::string& text);

std::vector<AxiomReport> run_suite(const Field& F, const std::vector<SuiteCase>& cases);
// "axiom<TAB>instance<TAB>verdict<TAB>checks" (records) or a padded human-readable line.
std::string format_report(const AxiomReport& r, bool records);

} // namespace phax
