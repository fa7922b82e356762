#include "coxeter_cli/cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "coxeter/centralizer.hpp"
#include "coxeter/decomp.hpp"
#include "coxeter/error.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/render.hpp"
#include "coxeter/roots.hpp"

namespace coxeter::cli {

const char* const kCounterexampleGraph =
    "# rank 7, I = {4,5}\n"
    "nodes 7\n"
    "edge 1 3 3\n"
    "edge 2 3 3\n"
    "edge 3 4 3\n"
    "edge 4 5 3\n"
    "edge 5 6 3\n"
    "edge 5 7 3\n"
    "edge 3 6 inf\n"
    "edge 3 7 inf\n";

namespace {

struct Config {
  std::string graph_path;
  std::string type;
  std::string subset;
  std::string word;
  std::string y;
  std::string z;
  std::string format = "text";
  int depth = 12;
  std::size_t max_nodes = 0;
  std::size_t max_edges = 0;
  std::size_t max_roots = 20000;
};

CoxeterGraph load(const Config& c) {
  if (!c.type.empty() && !c.graph_path.empty()) throw PreconditionError("give either --graph or --type, not both");
  if (!c.type.empty()) return make_graph(c.type);
  if (!c.graph_path.empty()) return load_graph(c.graph_path);
  throw PreconditionError("a graph is required (--graph PATH or --type NAME)");
}

GroupoidLimits limits_for(const Config& c, int n, int k) {
  GroupoidLimits l = default_limits(n, k);
  if (c.max_nodes) l.max_nodes = c.max_nodes;
  if (c.max_edges) l.max_edges = c.max_edges;
  l.max_roots = c.max_roots;
  return l;
}

int cmd_roots(const Config& c, std::ostream& out, std::ostream& err) {
  CoxeterGraph g = load(c);
  GeneratorSet j = c.subset.empty() ? GeneratorSet::all(g.size()) : parse_subset(c.subset, g.size());
  Format f = parse_format(c.format);
  std::vector<std::string> bad;
  for (auto comp : components(g, j)) {
    if (!classify(g, comp)) bad.push_back(to_string(comp));
  }
  if (!bad.empty()) {
    err << "not of finite type; offending component(s):";
    for (const auto& b : bad) err << ' ' << b;
    err << '\n';
    return kInputError;
  }
  Representation rep(g);
  out << render_root_table(root_table(rep, j), f);
  return kOk;
}

int status_of(const CentralizerReport& r) {
  switch (r.outcome()) {
    case Outcome::verified:
      return kOk;
    case Outcome::refuted:
      return kRefuted;
    case Outcome::incomplete:
      return kIncomplete;
  }
  return kIncomplete;
}

void depth_window(const Representation& rep, GeneratorSet i, const Config& c, std::ostream& out) {
  SupportCheck sc = perp_support_check(rep, i, c.depth, c.max_roots);
  out << "\nDEPTH-WINDOW depth <= " << c.depth << (sc.truncated ? " (truncated)" : "") << '\n';
  out << "  roots orthogonal to I: " << sc.checked << ", supports meeting iota_bar(I): " << sc.violations.size()
      << '\n';
  for (const auto& r : sc.violations) out << "  " << format_root(r) << '\n';
}

int cmd_centralizer(const Config& c, std::ostream& out) {
  CoxeterGraph g = load(c);
  GeneratorSet i = c.subset.empty() ? GeneratorSet{} : parse_subset(c.subset, g.size());
  Format f = parse_format(c.format);
  Representation rep(g);
  CentralizerReport r = verify_main_theorem(rep, i, limits_for(c, g.size(), i.size()));
  if (f == Format::dot) {
    out << render_groupoid_dot(r.groupoid);
  } else {
    out << render_report(rep, r);
    depth_window(rep, i, c, out);
  }
  return r.complete() ? kOk : kIncomplete;
}

int cmd_verify(const Config& c, std::ostream& out) {
  CoxeterGraph g = load(c);
  GeneratorSet i = c.subset.empty() ? GeneratorSet{} : parse_subset(c.subset, g.size());
  Representation rep(g);
  CentralizerReport r = verify_main_theorem(rep, i, limits_for(c, g.size(), i.size()));
  out << outcome_name(r) << '\n';
  out << "I = " << to_string(i) << ", A>1-free: " << (r.hypothesis ? "yes" : "no") << '\n';
  out << "groupoid nodes " << r.groupoid.nodes.size() << ", loop generators " << r.generators.size()
      << ", Pi^I candidates " << r.perp.roots.size()
      << ", finite-part roots " << (r.finite ? r.finite->finite_indices.size() : 0) << '\n';
  for (const auto& v : r.verdicts) {
    if (!v.fixed) {
      out << "generator " << v.generator + 1 << " moves " << format_root(r.perp.roots[v.root]) << " to "
          << format_root(v.image) << '\n';
    }
  }
  if (!r.complete()) {
    out << "search incomplete";
    if (r.groupoid.truncated) out << ": " << r.groupoid.truncation_reason;
    if (!r.finite_part_error.empty()) out << ": " << r.finite_part_error;
    out << '\n';
  } else {
    out << "checked on all loop generators of the computed groupoid\n";
  }
  return status_of(r);
}

Word parse_word(const std::string& text, int n) {
  std::vector<int> w = parse_index_list(text, n);
  return Word(w.begin(), w.end());
}

int cmd_decompose(const Config& c, std::ostream& out) {
  CoxeterGraph g = load(c);
  Representation rep(g);
  Format f = parse_format(c.format);
  if (f == Format::dot) throw PreconditionError("decompose supports text and tsv output");
  Element u = Element::from_word(rep, parse_word(c.word, g.size()));
  Tuple y = parse_tuple(c.y, g.size());
  Tuple z = parse_tuple(c.z, g.size());
  GeneratorSet j = c.subset.empty() ? GeneratorSet{} : parse_subset(c.subset, g.size());
  Decomposition d = standard_decomposition(rep, u, y, z, j);
  if (f == Format::text) {
    out << "l(u) = " << length(rep, u) << ", factors " << d.size() << '\n';
  }
  out << render_decomposition(d, f);
  if (f == Format::text) {
    for (std::size_t i = 0; i < d.tuples.size(); ++i) {
      out << "y(" << i << ") = " << to_string(d.tuples[i]) << "  J(" << i << ") = " << to_string(d.sets[i]) << '\n';
    }
  }
  return kOk;
}

int cmd_counterexample(std::ostream& out) {
  Representation rep(parse_graph(kCounterexampleGraph));
  MoveCache cache(rep);
  // The closed walk from x_I = (s4,s5), with the tuple expected after each move.
  const std::vector<std::pair<int, std::vector<int>>> walk = {
      {3, {3, 4}}, {1, {1, 3}}, {2, {3, 2}}, {4, {4, 3}},
      {5, {5, 4}}, {6, {6, 5}}, {7, {5, 7}}, {4, {4, 5}},
  };
  auto zero_based = [](std::vector<int> v) {
    for (int& x : v) --x;
    return Tuple(std::move(v));
  };
  const Tuple base = zero_based({4, 5});
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    out << (cond ? "PASS  " : "FAIL  ") << what << '\n';
    ok = ok && cond;
  };

  Tuple cur = base;
  Element w = Element::identity(rep.rank());
  for (const auto& [t, expected] : walk) {
    Move m = cache.elementary(cur, t - 1);
    Tuple want = zero_based(expected);
    check(m.target == want, to_string(cur) + " -s" + std::to_string(t) + "-> " + to_string(m.target));
    w = *m.element * w;
    cur = m.target;
  }
  check(cur == base, "walk closes at x_I = " + to_string(base));
  check(is_in_Y(rep, w, base, base), "w lies in Y_I");
  check(w.apply(rep.simple_root(0)) == rep.simple_root(1), "w . alpha_1 = alpha_2");
  check(w.apply(rep.simple_root(3)) == rep.simple_root(3) && w.apply(rep.simple_root(4)) == rep.simple_root(4),
        "w fixes alpha_4 and alpha_5");
  Word word = reduced_word(rep, w);
  std::size_t inversions = inversion_set(rep, word).size();
  check(word.size() == inversions, "l(w) = |Phi[w]| = " + std::to_string(inversions));
  out << "l(w) = " << word.size() << '\n';
  out << "w = " << format_word(word) << '\n';
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kRefuted;
}

void add_graph_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--graph", c.graph_path, "Coxeter graph file");
  cmd->add_option("--type", c.type, "finite type name such as E8, H4, I2(5)");
}

void add_limit_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--max-nodes", c.max_nodes, "groupoid node limit")->check(CLI::PositiveNumber);
  cmd->add_option("--max-edges", c.max_edges, "groupoid edge limit")->check(CLI::PositiveNumber);
  cmd->add_option("--max-roots", c.max_roots, "root pool limit")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root systems and centralizers of parabolic subgroups in Coxeter groups", "coxeter"};
  app.require_subcommand(1);
  Config c;

  auto* roots = app.add_subcommand("roots", "positive roots of a finite-type graph or subset");
  add_graph_options(roots, c);
  roots->add_option("--subset", c.subset, "generators, 1-based, comma separated");
  roots->add_option("--format", c.format, "text or tsv");

  auto* centralizer = app.add_subcommand("centralizer", "groupoid, Pi^I and loop generators for x_I");
  add_graph_options(centralizer, c);
  centralizer->add_option("--subset", c.subset, "the subset I");
  centralizer->add_option("--format", c.format, "text or dot");
  add_limit_options(centralizer, c);
  centralizer->add_option("--depth", c.depth, "depth bound for the root window")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "check that Y_I fixes the finite part of Pi^I");
  add_graph_options(verify, c);
  verify->add_option("--subset", c.subset, "the subset I");
  add_limit_options(verify, c);

  auto* decompose = app.add_subcommand("decompose", "standard decomposition of u in Y_{z,y}");
  add_graph_options(decompose, c);
  decompose->add_option("--word", c.word, "u as a word, 1-based generators, comma separated");
  decompose->add_option("--y", c.y, "source tuple y")->required();
  decompose->add_option("--z", c.z, "target tuple z")->required();
  decompose->add_option("--subset", c.subset, "the set J");
  decompose->add_option("--format", c.format, "text or tsv");

  auto* counterexample = app.add_subcommand("counterexample", "replay the closed walk on the built-in graph");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*roots) return cmd_roots(c, out, err);
    if (*centralizer) return cmd_centralizer(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*decompose) return cmd_decompose(c, out);
    if (*counterexample) return cmd_counterexample(out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kRefuted;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace coxeter::cli
