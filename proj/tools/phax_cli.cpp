// Command-line front end: homology, grids, sequences, axiom suites, oracle comparison.

#include "phax/axioms.hpp"
#include "phax/barcode.hpp"
#include "phax/errors.hpp"
#include "phax/io.hpp"
#include "phax/sequences.hpp"
#include "phax/skeletal.hpp"
#include "phax/suite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace phax;

namespace {

struct Options {
  std::uint32_t field = 2;
  std::string format = "text";
  std::vector<std::string> inputs;
  std::string pair_file;
  std::string map_file;
  std::string interval;
  int degree = 0;
  int n_max = -1;
  bool as_pair = false;
  bool triple = false, triad = false, mv = false;
  int fuzz = 0;
  std::uint64_t seed = 0;
};

bool records(const Options& o) { return o.format == "records"; }

std::string chain_text(const ChainSpace& space, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(v[i]) + "*" + to_string(space.basis[i]);
  }
  return out.empty() ? "0" : out;
}

int cmd_compute(const Options& o) {
  Field F(o.field);
  auto pair = parse_pair_file(o.inputs.at(0));
  if (!o.as_pair) pair = RelativeFilteredPair::absolute(pair.total());
  Interval I = parse_interval(o.interval);
  GroupPtr H = homology(F, pair, o.degree, I);
  if (records(o)) {
    std::cout << "homology\t" << o.degree << '\t' << I.lo << '\t' << I.hi << '\t' << H->dim() << '\n';
    for (const auto& r : H->reps()) std::cout << "rep\t" << chain_text(H->space(), r) << '\n';
  } else {
    std::cout << "H_" << o.degree << " on " << I.str() << " over GF(" << F.p() << "): dim " << H->dim() << '\n';
    for (std::size_t k = 0; k < H->dim(); ++k)
      std::cout << "  rep " << k << ": " << chain_text(H->space(), H->reps()[k]) << '\n';
  }
  return 0;
}

int cmd_grid(const Options& o) {
  Field F(o.field);
  auto pair = parse_pair_file(o.inputs.at(0));
  if (!o.as_pair) pair = RelativeFilteredPair::absolute(pair.total());
  BettiGrid g = betti_grid(F, pair, o.degree);
  const std::size_t m = g.values.size();
  if (records(o)) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j)
        std::cout << "grid\t" << o.degree << '\t' << g.values[i] << '\t' << g.values[j] << '\t'
                  << g.dims[i][j] << '\n';
    return 0;
  }
  std::cout << "persistent Betti numbers, degree " << o.degree << " (row: lo, column: hi)\n";
  std::cout << "lo\\hi";
  for (const auto& v : g.values) std::cout << '\t' << v;
  std::cout << '\n';
  for (std::size_t i = 0; i < m; ++i) {
    std::cout << g.values[i];
    for (std::size_t j = 0; j < m; ++j) std::cout << '\t' << (j < i ? "." : std::to_string(g.dims[i][j]));
    std::cout << '\n';
  }
  return 0;
}

const FilteredSet& section(const std::map<std::string, FilteredSet>& s, const std::string& name,
                           const std::string& file) {
  auto it = s.find(name);
  if (it == s.end()) throw ParseError(file + ": missing [" + name + "] section");
  return it->second;
}

int cmd_sequence(const Options& o) {
  Field F(o.field);
  Interval I = parse_interval(o.interval);
  std::optional<int> n_max;
  if (o.n_max >= 0) n_max = o.n_max;
  ExactSequence seq;
  if (o.triple) {
    auto s = parse_sections_file(o.pair_file);
    seq = les_triple(F, section(s, "X", o.pair_file), section(s, "A", o.pair_file),
                     section(s, "B", o.pair_file), I, n_max);
  } else if (o.triad) {
    auto s = parse_sections_file(o.pair_file);
    seq = triad_sequence(F, section(s, "X", o.pair_file), section(s, "X1", o.pair_file),
                         section(s, "X2", o.pair_file), I, n_max);
  } else if (o.mv) {
    auto s = parse_sections_file(o.pair_file);
    seq = mayer_vietoris(F, section(s, "X1", o.pair_file), section(s, "X2", o.pair_file), I, n_max);
  } else {
    seq = les_pair(F, parse_pair_file(o.pair_file), I, n_max);
  }
  auto rep = check_exact(F, seq);
  for (std::size_t k = 0; k < seq.nodes.size(); ++k) {
    const auto& nd = seq.nodes[k];
    std::string verdict = "-";
    if (k > 0) verdict = rep.nodes[k - 1].failure == ExactnessFailure::None ? "exact" : "not-exact";
    if (records(o)) {
      std::cout << "node\t" << nd.label << '\t' << nd.dim << '\t' << verdict << '\n';
      if (k < seq.arrows.size())
        std::cout << "arrow\t" << seq.arrows[k].label << '\t' << rank(F, seq.arrows[k].matrix) << '\n';
    } else {
      std::cout << nd.label << "  dim " << nd.dim << "  " << verdict << '\n';
      if (k < seq.arrows.size())
        std::cout << "   | " << seq.arrows[k].label << " (rank " << rank(F, seq.arrows[k].matrix) << ")\n";
    }
  }
  if (!records(o)) std::cout << (rep.exact ? "sequence is exact\n" : "sequence is NOT exact\n");
  return rep.exact ? 0 : 1;
}

int cmd_verify(const Options& o) {
  Field F(o.field);
  std::vector<SuiteCase> cases;
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    Rng rng = instance_rng(o.seed, 1000000 + i);
    auto cs = cases_for_pair(rng, parse_pair_file(o.inputs[i]), o.inputs[i]);
    cases.insert(cases.end(), cs.begin(), cs.end());
  }
  if (o.fuzz > 0) {
    auto cs = fuzz_cases(o.seed, o.fuzz);
    cases.insert(cases.end(), cs.begin(), cs.end());
  }
  if (cases.empty()) {
    // Built-in instances: points and standard simplices.
    for (const auto& a : fuzz_palette()) {
      InstanceBundle b;
      b.name = "point@" + a.str();
      b.alpha = a;
      b.intervals = critical_intervals(fuzz_palette());
      cases.push_back({AxiomId::A6, b});
      for (int q = 0; q <= 3; ++q) {
        b.name = "simplex" + std::to_string(q) + "@" + a.str();
        b.q = q;
        cases.push_back({AxiomId::S3, b});
      }
    }
  }
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : run_suite(F, cases)) {
    std::cout << format_report(r, records(o)) << '\n';
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? fail : skip)++;
  }
  if (!records(o)) std::cout << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skip\n";
  return fail == 0 ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  Field F(o.field);
  auto pair = parse_pair_file(o.inputs.at(0));
  if (!o.as_pair) pair = RelativeFilteredPair::absolute(pair.total());
  auto bars = barcode(F, pair);
  auto crit = pair.critical_values();
  bool ok = true;
  if (!records(o)) std::cout << "degree\tinterval\tdirect\tskeletal\tbarcode\ttheta\n";
  for (int n = 0; n <= default_n_max(pair); ++n)
    for (const auto& I : critical_intervals(crit)) {
      std::size_t direct = homology(F, pair, n, I)->dim();
      std::size_t bar = bars_alive(bars, n, I);
      std::string skel, th = "ok";
      try {
        skel = std::to_string(skeletal_homology(F, pair, n, I).dim());
      } catch (const OracleMismatch& e) {
        skel = "error";
      }
      try {
        theta(F, pair, n, I);
      } catch (const OracleMismatch& e) {
        th = "not-invertible";
      }
      bool agree = skel == std::to_string(direct) && bar == direct && th == "ok";
      ok = ok && agree;
      if (records(o))
        std::cout << "oracle\t" << n << '\t' << I.lo << '\t' << I.hi << '\t' << direct << '\t' << skel
                  << '\t' << bar << '\t' << th << '\n';
      else
        std::cout << n << '\t' << I.str() << '\t' << direct << '\t' << skel << '\t' << bar << '\t' << th
                  << (agree ? "" : "\tMISMATCH") << '\n';
    }
  return ok ? 0 : 1;
}

int cmd_induced(const Options& o) {
  Field F(o.field);
  auto f = parse_map_file(o.map_file);
  Interval I = parse_interval(o.interval);
  LinearMap m = induced_map(F, f, o.degree, I);
  if (records(o)) {
    std::cout << "induced\t" << o.degree << '\t' << I.lo << '\t' << I.hi << '\t' << m.matrix.rows() << '\t'
              << m.matrix.cols() << '\n';
    for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
      std::cout << "row";
      for (std::size_t j = 0; j < m.matrix.cols(); ++j) std::cout << '\t' << m.matrix(i, j);
      std::cout << '\n';
    }
  } else {
    std::cout << "f_* in degree " << o.degree << " on " << I.str() << ": " << m.matrix.rows() << "x"
              << m.matrix.cols() << '\n';
    print(std::cout, m.matrix);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-indexed persistent homology of filtered sets"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "Prime characteristic of the coefficient field")->capture_default_str();
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}))->capture_default_str();
  };

  auto* compute = app.add_subcommand("compute", "Persistent homology group on one interval");
  compute->add_option("--input", o.inputs, "Filtration or pair file")->required()->expected(1);
  compute->add_flag("--pair", o.as_pair, "Treat the input as a relative pair");
  compute->add_option("--interval", o.interval, "Interval as E,E'")->required();
  compute->add_option("--degree", o.degree, "Homological degree")->required();
  common(compute);

  auto* grid = app.add_subcommand("grid", "Persistent Betti numbers over all critical-value intervals");
  grid->add_option("--input", o.inputs, "Filtration or pair file")->required()->expected(1);
  grid->add_flag("--pair", o.as_pair, "Treat the input as a relative pair");
  grid->add_option("--degree", o.degree, "Homological degree")->required();
  common(grid);

  auto* seq = app.add_subcommand("sequence", "Long exact sequence with exactness verdicts");
  seq->add_option("--pair", o.pair_file, "Pair file ([X],[A]); [X],[A],[B] for --triple; [X],[X1],[X2] for --triad; [X1],[X2] for --mv")->required();
  seq->add_option("--interval", o.interval, "Interval as E,E'")->required();
  seq->add_option("--max-degree", o.n_max, "Top degree (default: dimension + 1)");
  auto* t1 = seq->add_flag("--triple", o.triple, "Sequence of a triple");
  auto* t2 = seq->add_flag("--triad", o.triad, "Sequence of a proper triad");
  auto* t3 = seq->add_flag("--mv", o.mv, "Mayer-Vietoris sequence");
  t1->excludes(t2)->excludes(t3);
  t2->excludes(t3);
  common(seq);

  auto* verify = app.add_subcommand("verify-axioms", "Run the axiom suite");
  verify->add_option("--input", o.inputs, "Pair files to check");
  verify->add_option("--fuzz", o.fuzz, "Number of random instances");
  verify->add_option("--seed", o.seed, "Random seed");
  common(verify);

  auto* oracle = app.add_subcommand("oracle-compare", "Direct vs skeletal vs barcode dimensions");
  oracle->add_option("--input", o.inputs, "Filtration or pair file")->required()->expected(1);
  oracle->add_flag("--pair", o.as_pair, "Treat the input as a relative pair");
  common(oracle);

  auto* induced = app.add_subcommand("induced", "Matrix of an induced map");
  induced->add_option("--map", o.map_file, "Map file")->required();
  induced->add_option("--interval", o.interval, "Interval as E,E'")->required();
  induced->add_option("--degree", o.degree, "Homological degree")->required();
  common(induced);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*compute) return cmd_compute(o);
    if (*grid) return cmd_grid(o);
    if (*seq) return cmd_sequence(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*induced) return cmd_induced(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
