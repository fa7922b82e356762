// Acceptance suite: one line per criterion with its verdict, a short
// summary, and the wall time against the allowed budget. Exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "coxeter/centralizer.hpp"
#include "coxeter/decomp.hpp"
#include "coxeter/error.hpp"
#include "coxeter/refsub.hpp"
#include "coxeter/render.hpp"
#include "coxeter_cli/cli.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

namespace coxeter {
namespace {

using testing::set1;
using testing::tup;

struct Result {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

// Shared by criteria 4 and 7.
constexpr std::uint64_t kSuiteSeed = 20260401;
constexpr int kSuiteGraphs = 240;
constexpr std::size_t kWindowCap = 200000000;
// Loop generators with a complete Pi^I are rare in the suite distribution, so
// criterion 4 also draws a larger sample from it with a smaller closure cap.
constexpr std::uint64_t kExtraSeed = 20260402;
constexpr int kExtraGraphs = 12000;
constexpr std::size_t kExtraRootCap = 500;

testing::GraphShape suite_shape() {
  testing::GraphShape shape;
  shape.min_nodes = 2;
  shape.max_nodes = 7;
  shape.labels = {2, 3, 4, kInfinity};
  shape.max_infinite_edges = 2;
  return shape;
}

Result e8_table() {
  Result o;
  std::ostringstream out, err;
  int code = cli::run({"roots", "--type", "E8", "--format", "tsv"}, out, err);
  o.require(code == cli::kOk, "roots --type E8 exited with " + std::to_string(code));
  std::string golden = testing::read_file(testing::golden_path("e8_roots.tsv"));
  auto ours = testing::split(out.str(), '\n');
  auto theirs = testing::split(golden, '\n');
  o.require(ours.size() == 121, "expected 120 rows, got " + std::to_string(ours.size() - 1));
  std::size_t same = 0;
  for (std::size_t i = 0; i < std::min(ours.size(), theirs.size()); ++i) {
    same += ours[i] == theirs[i];
    o.require(ours[i] == theirs[i], "row " + std::to_string(i) + " differs");
  }

  // Action cells, checked against the table and by reflecting exactly.
  auto rows = testing::read_golden("e8_roots.tsv", false);
  Representation rep(make_graph("E8"));
  auto check_cell = [&](int row, int gen) {
    const auto& r = rows[static_cast<std::size_t>(row - 1)];
    const std::string& cell = r.actions[static_cast<std::size_t>(gen - 1)];
    Vector image = rep.reflect_simple(gen - 1, r.coeffs);
    std::string what = "r" + std::to_string(gen) + " . gamma" + std::to_string(row);
    if (cell == ".") {
      o.require(image == r.coeffs, what + " should be fixed");
    } else if (cell == "---") {
      o.require(r.coeffs == rep.simple_root(gen - 1), what + " should be simple");
    } else {
      o.require(image == rows[static_cast<std::size_t>(std::stoi(cell) - 1)].coeffs, what + " != gamma" + cell);
    }
    auto out_cells = testing::split(testing::split(ours[static_cast<std::size_t>(row)], '\t')[3], ',');
    o.require(out_cells[static_cast<std::size_t>(gen - 1)] == cell, what + " printed differently");
  };
  o.require(rows[56].actions[3] == "63", "r4 . gamma57 is not gamma63 in the table");
  check_cell(57, 4);
  testing::Rng rng(8);
  for (int i = 0; i < 30; ++i) check_cell(testing::uniform(rng, 1, 120), testing::uniform(rng, 1, 8));
  o.summary = std::to_string(same) + "/121 lines identical, 31 action cells";
  return o;
}

Result counts_and_anchors() {
  Result o;
  const std::vector<std::pair<std::string, std::size_t>> counts = {{"H4", 60}, {"F4", 24}, {"B5", 25}, {"D7", 42}};
  std::string got;
  for (const auto& [name, n] : counts) {
    Representation rep(make_graph(name));
    std::size_t k = positive_roots(rep, GeneratorSet::all(rep.rank())).size();
    o.require(k == n, name + " has " + std::to_string(k) + " positive roots");
    got += (got.empty() ? "" : "/") + std::to_string(k);
  }
  Representation h4(make_graph("H4"));
  RootTable t = root_table(h4, GeneratorSet::all(4));
  std::string highest = "[";
  for (std::size_t i = 0; i < 4; ++i) highest += (i ? "," : "") + format_golden(t.roots.back()[i]);
  highest += "]";
  o.require(highest == "[3c+2,4c+2,3c+1,2c]", "H4 highest root " + highest);

  Representation f4(make_graph("F4"));
  std::set<std::string> listed;
  for (const auto& r : testing::read_golden("f4_roots_class1.tsv", false)) {
    listed.insert(format_vector(r.coeffs));
    listed.insert(format_vector(Vector(r.coeffs.rbegin(), r.coeffs.rend())));
  }
  std::set<std::string> ours;
  for (const auto& r : positive_roots(f4, GeneratorSet::all(4))) ours.insert(format_root(r));
  o.require(ours == listed, "F4 roots differ from the 12 listed roots and their mirrors");
  o.summary = "counts " + got + ", H4 highest " + highest + ", F4 " + std::to_string(listed.size()) + " roots";
  return o;
}

Result counterexample() {
  Result o;
  Representation rep(testing::counterexample_graph());
  MoveCache cache(rep);
  Groupoid g = build_groupoid(cache, tup({4, 5}));
  std::set<GeneratorSet> sets;
  for (const auto& y : g.nodes) sets.insert(y.set());
  const std::set<GeneratorSet> expected = {set1({4, 5}), set1({3, 4}), set1({5, 6}),
                                           set1({5, 7}), set1({1, 3}), set1({2, 3})};
  o.require(!g.truncated, "groupoid truncated");
  o.require(sets == expected, "underlying sets differ");
  auto gens = y_loop_generators(cache, g);
  PerpRoots perp = pi_perp_generators(cache, g, gens);
  std::set<std::string> roots;
  for (const auto& r : perp.roots) roots.insert(format_root(r));
  o.require(perp.complete, "Pi^I closure incomplete");
  o.require(roots == std::set<std::string>{format_vector(rep.simple_root(0)), format_vector(rep.simple_root(1))},
            "Pi^I is not {alpha_1, alpha_2}");

  const std::vector<int> walk = {3, 1, 2, 4, 5, 6, 7, 4};
  Tuple cur = tup({4, 5});
  Element w = Element::identity(7);
  for (int t : walk) {
    Move m = cache.elementary(cur, t - 1);
    w = *m.element * w;
    cur = m.target;
  }
  o.require(cur == tup({4, 5}), "walk ends at " + to_string(cur));
  o.require(is_in_Y(rep, w, tup({4, 5}), tup({4, 5})), "walk product not in Y_I");
  o.require(w.apply(rep.simple_root(0)) == rep.simple_root(1), "w . alpha_1 != alpha_2");
  o.summary = std::to_string(sets.size()) + " underlying sets (" + std::to_string(g.nodes.size()) +
              " ordered tuples), Pi^I = {a1,a2} complete, walk of " + std::to_string(walk.size()) +
              " moves, l(w) = " + std::to_string(length(rep, w));
  return o;
}

struct SuiteTally {
  int runs = 0, verified = 0, refuted = 0, incomplete = 0, with_generators = 0, nonvacuous = 0;
  std::size_t checks = 0;

  std::string str() const {
    return std::to_string(runs) + " graphs: " + std::to_string(verified) + " verified, " + std::to_string(incomplete) +
           " truncated, " + std::to_string(refuted) + " refuted, " + std::to_string(with_generators) +
           " with loop generators, " + std::to_string(nonvacuous) + " with " + std::to_string(checks) +
           " generator/root checks";
  }
};

void run_suite(Result& o, SuiteTally& tally, std::uint64_t seed, int graphs, std::optional<std::size_t> root_cap) {
  testing::Rng rng(seed);
  for (int it = 0; it < graphs; ++it) {
    CoxeterGraph g = testing::random_graph(rng, suite_shape());
    GeneratorSet i = testing::random_a_gt1_free_subset(rng, g, 3);
    Representation rep(g);
    GroupoidLimits limits = default_limits(g.size(), i.size());
    if (root_cap) limits.max_roots = *root_cap;
    CentralizerReport r = verify_main_theorem(rep, i, limits);
    o.require(r.hypothesis, "subset " + to_string(i) + " is not A>1-free");
    for (const auto& v : r.verdicts) {
      o.require(v.fixed, format_graph(g) + "I = " + to_string(i) + ": generator moves " +
                             format_root(r.perp.roots[static_cast<std::size_t>(v.root)]));
    }
    ++tally.runs;
    tally.checks += r.verdicts.size();
    tally.nonvacuous += !r.verdicts.empty();
    tally.with_generators += !r.generators.empty();
    switch (r.outcome()) {
      case Outcome::verified:
        ++tally.verified;
        break;
      case Outcome::refuted:
        ++tally.refuted;
        break;
      case Outcome::incomplete:
        ++tally.incomplete;
        break;
    }
  }
  o.require(tally.refuted == 0, std::to_string(tally.refuted) + " refuted runs");
}

Result main_theorem_suite() {
  Result o;
  SuiteTally suite, extra;
  run_suite(o, suite, kSuiteSeed, kSuiteGraphs, std::nullopt);
  run_suite(o, extra, kExtraSeed, kExtraGraphs, kExtraRootCap);
  o.require(extra.nonvacuous > 0, "no generator/root pair was checked");
  o.summary = suite.str() + "; extra sample " + extra.str();
  return o;
}

Result d7_example() {
  Result o;
  Representation rep(make_graph("D7"));
  Element u = Element::from_word(rep, testing::d7_example_word());
  Decomposition d = standard_decomposition(rep, u, tup({1, 2, 3}), tup({5, 4, 3}), set1({5}));
  o.require(d.size() == 4, "expected 4 factors");
  if (d.size() != 4) return o;
  const std::vector<std::size_t> lengths = {8, 4, 6, 4};
  const std::vector<FactorKind> kinds = {FactorKind::wide, FactorKind::narrow, FactorKind::narrow,
                                         FactorKind::narrow};
  const std::vector<int> ts = {4, 6, 7, 3};
  const std::vector<GeneratorSet> ks = {set1({1, 2, 3, 4, 5}), set1({3, 4, 5, 6}), set1({4, 5, 6, 7}),
                                        set1({3, 4, 5, 6})};
  const std::vector<Tuple> ys = {tup({1, 2, 3}), tup({3, 4, 5}), tup({4, 5, 6}), tup({6, 5, 4}), tup({5, 4, 3})};
  const std::vector<GeneratorSet> js = {set1({5}), set1({1}), set1({1}), set1({1}), set1({1})};
  std::size_t total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Factor& f = d.factors[i];
    std::string at = "factor " + std::to_string(i) + ": ";
    o.require(f.word.size() == lengths[i], at + "length");
    o.require(f.kind == kinds[i], at + "kind");
    o.require(f.t + 1 == ts[i], at + "t");
    o.require(f.k == ks[i], at + "K");
    total += f.word.size();
  }
  o.require(d.tuples == ys, "tuples y^(i) differ");
  o.require(d.sets == js, "sets J^(i) differ");
  o.require(length(rep, u) == 22 && total == 22, "l(u) != 22 = sum of factor lengths");
  Decomposition s = simplify(d);
  o.require(s.size() == 3 && s.factors[0].omega == d.factors[0].omega && s.factors[1].omega == d.factors[1].omega &&
                s.factors[2].omega == d.factors[3].omega,
            "simplify did not remove exactly omega_2");
  o.require(verify_semi_standard(rep, s).ok, "simplified decomposition is not semi-standard");
  o.require(!is_standard(rep, s), "simplified decomposition passed the standardness check");
  o.summary = "lengths 8,4,6,4 kinds W,N,N,N, l(u) = 22; simplify drops omega_2, result not standard";
  return o;
}

Result invariant_suite() {
  Result o;
  testing::Rng rng(6);
  testing::GraphShape shape;
  shape.min_nodes = 2;
  shape.max_nodes = 7;
  shape.labels = {2, 3, 4, 5, 6, kInfinity};
  std::size_t moves = 0, w0_checks = 0;
  for (int it = 0; it < 1000; ++it) {
    CoxeterGraph g = testing::random_graph(rng, shape);
    Representation rep(g);
    const int n = g.size();
    Word word = testing::random_word(rng, n, 12);
    Element w = Element::from_word(rep, word);
    std::string where = format_graph(g) + "w = " + format_word(word);

    for (int s = 0; s < n; ++s) {
      Vector ws = w.column(s);
      for (int t = 0; t < n; ++t) {
        o.require(rep.pairing(ws, w.column(t)) == rep.form(s, t), where + ": form not preserved");
      }
      o.require(rep.pairing(ws, ws).is_one(), where + ": root not of unit norm");
      Sign sign = Sign::zero;
      try {
        sign = root_sign(ws);
      } catch (const InvariantViolation&) {
        o.require(false, where + ": root with mixed signs");
      }
      GeneratorSet supp = support(ws);
      o.require(components(g, supp).size() == 1, where + ": disconnected support");
      bool descent = length(rep, w.times_simple(rep, s)) < length(rep, w);
      o.require(descent == (sign == Sign::negative), where + ": descent criterion");
    }
    int l = length(rep, w);
    o.require(static_cast<std::size_t>(l) == inversion_set(rep, w).size(), where + ": l(w) != |Phi[w]|");
    o.require(l <= static_cast<int>(word.size()) && (word.size() - static_cast<std::size_t>(l)) % 2 == 0,
              where + ": length parity");

    GeneratorSet j = testing::random_finite_subset(rng, g, 4);
    if (!j.empty()) {
      ++w0_checks;
      Element w0 = longest_element(rep, j);
      o.require((w0 * w0).is_identity(), where + ": w0 not an involution");
      o.require(static_cast<std::size_t>(length(rep, w0)) == positive_roots(rep, j).size(),
                where + ": l(w0) != |Phi_J^+|");
      for (int s : j) {
        int image = simple_root_index((-Root(w0.column(s))).coords());
        o.require(image >= 0 && j.contains(image), where + ": w0 does not send Pi_J to -Pi_J");
      }
    }

    Tuple x = testing::random_tuple(rng, n, 3);
    if (!is_finite_type(g, x.set())) continue;
    MoveCache cache(rep);
    for (int t = 0; t < n; ++t) {
      if (x.set().contains(t) || !cache.available(x, t)) continue;
      ++moves;
      Move m = cache.elementary(x, t);
      std::size_t perp = 0;
      Root first;
      for (const auto& r : inversion_set(rep, *m.element)) {
        if (is_orthogonal_to(rep, r, x.set())) {
          if (perp++ == 0) first = r;
        }
      }
      auto gamma = cache.gamma(x, t);
      if (m.self_loop()) {
        o.require(perp == 1 && gamma && first == *gamma, where + ": self-loop without a unique gamma");
        o.require(gamma && reflection(rep, *gamma) == *m.element, where + ": s_gamma != w_x^t");
      } else {
        o.require(perp == 0 && !gamma, where + ": moving arrow inverts a root orthogonal to [x]");
      }
    }
  }
  o.summary = "1000 words, " + std::to_string(w0_checks) + " longest elements, " + std::to_string(moves) + " moves";
  return o;
}

Result support_window() {
  Result o;
  testing::Rng rng(kSuiteSeed);
  std::size_t roots = 0, truncated = 0, nonempty_bar = 0;
  for (int it = 0; it < kSuiteGraphs; ++it) {
    CoxeterGraph g = testing::random_graph(rng, suite_shape());
    testing::random_a_gt1_free_subset(rng, g, 3);  // keep the graph sequence of criterion 4
    GeneratorSet i = testing::random_subset(rng, g.size(), g.size());
    // With iota_bar(I) empty every support lies in S, so there is nothing to enumerate.
    if (iota_bar(g, i).empty()) continue;
    ++nonempty_bar;
    Representation rep(g);
    SupportCheck sc = perp_support_check(rep, i, 12, kWindowCap);
    roots += sc.checked;
    truncated += sc.truncated;
    o.require(!sc.truncated, format_graph(g) + "I = " + to_string(i) + ": window capped");
    for (const auto& r : sc.violations) {
      o.require(false, format_graph(g) + "I = " + to_string(i) + ": " + format_root(r));
    }
  }
  o.summary = std::to_string(kSuiteGraphs) + " graphs, " + std::to_string(nonempty_bar) + " with iota_bar(I) nonempty, " +
              std::to_string(roots) + " orthogonal roots of depth <= 12, " + std::to_string(truncated) +
              " windows capped";
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Result()> run;
};

}  // namespace
}  // namespace coxeter

int main(int argc, char** argv) {
  using namespace coxeter;
  std::set<int> only;
  for (int a = 1; a < argc; ++a) only.insert(std::atoi(argv[a]));
  const std::vector<Criterion> criteria = {
      {1, "E8 golden table", 2, e8_table},
      {2, "H4/F4/B5/D7 counts and anchors", 2, counts_and_anchors},
      {3, "counterexample regression", 1, counterexample},
      {4, "main theorem property suite", 60, main_theorem_suite},
      {5, "D7 decomposition example", 1, d7_example},
      {6, "core invariant suite", 60, invariant_suite},
      {7, "depth-12 support check", 30, support_window},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.budget_seconds;
    bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("criterion %d  %s  %-32s %s  [%.2f s / %.0f s]\n", c.number, pass ? "PASS" : "FAIL", c.name,
                o.summary.c_str(), secs, c.budget_seconds);
    if (!in_time) std::printf("    over time budget\n");
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
