#include "phax/suite.hpp"

#include "phax/io.hpp"
#include "phax/parallel.hpp"

#include <cstdio>

namespace phax {

std::string instance_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(seed * 0x9E3779B97F4A7C15ull + index * 0xBF58476D1CE4E5B9ull + 1);
}

std::vector<SuiteCase> cases_for_pair(Rng& rng, const RelativeFilteredPair& pair, const std::string& name) {
  const std::string id = name + "#" + instance_hash(serialize(pair)).substr(0, 8);
  std::vector<SuiteCase> out;
  auto with = [&](AxiomId a, auto fill) {
    InstanceBundle b;
    b.name = id;
    fill(b);
    out.push_back(SuiteCase{a, std::move(b)});
  };
  with(AxiomId::A1, [&](InstanceBundle& b) { b.pair = pair; });
  {
    auto g = random_map(rng, pair);
    auto f = random_map(rng, g.codomain());
    with(AxiomId::A2, [&](InstanceBundle& b) { b.f = f; b.g = g; });
  }
  {
    auto f = random_map(rng, pair);
    with(AxiomId::A3, [&](InstanceBundle& b) { b.f = f; });
  }
  with(AxiomId::A4, [&](InstanceBundle& b) { b.pair = pair; });
  {
    auto fg = random_contiguous_pair(rng, pair);
    with(AxiomId::A5, [&](InstanceBundle& b) { b.f = fg.f; b.g = fg.g; });
  }
  {
    FiltValue alpha = rng.pick(fuzz_palette());
    with(AxiomId::A6, [&](InstanceBundle& b) {
      b.alpha = alpha;
      b.intervals = critical_intervals(fuzz_palette());
    });
  }
  {
    auto ex = random_excision(rng);
    with(AxiomId::A7, [&](InstanceBundle& b) { b.x = ex.Xp; b.y = ex.A; });
    with(AxiomId::S1, [&](InstanceBundle& b) { b.x = ex.Xp; b.y = ex.A; });
  }
  with(AxiomId::S2, [&](InstanceBundle& b) { b.pair = pair; });
  {
    int q = static_cast<int>(rng.below(4));
    FiltValue alpha = rng.pick(fuzz_palette());
    with(AxiomId::S3, [&](InstanceBundle& b) {
      b.q = q;
      b.alpha = alpha;
      b.intervals = critical_intervals(fuzz_palette());
    });
  }
  return out;
}

std::vector<SuiteCase> fuzz_cases(std::uint64_t seed, int count) {
  std::vector<SuiteCase> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = instance_rng(seed, static_cast<std::uint64_t>(i));
    auto pair = random_pair(rng);
    auto cs = cases_for_pair(rng, pair, "fuzz" + std::to_string(i));
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

std::vector<AxiomReport> run_suite(const Field& F, const std::vector<SuiteCase>& cases) {
  // Workers claim cases by index; results land in input order.
  std::vector<AxiomReport> out(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) { out[i] = verify_axiom(F, cases[i].axiom, cases[i].bundle); });
  return out;
}

std::string format_report(const AxiomReport& r, bool records) {
  if (records) return to_string(r.axiom) + "\t" + r.instance + "\t" + to_string(r.verdict) + "\t" +
                     std::to_string(r.checks);
  std::string line = to_string(r.axiom) + "  " + r.instance + "  " + to_string(r.verdict) + "  (" +
                     std::to_string(r.checks) + " checks)";
  if (!r.detail.empty()) line += "  " + r.detail;
  return line;
}

} // namespace phax
