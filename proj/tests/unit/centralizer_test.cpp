#include <map>
#include <set>
#include <unordered_set>

#include <gtest/gtest.h>

#include "coxeter/centralizer.hpp"
#include "coxeter/error.hpp"
#include "coxeter/refsub.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

namespace coxeter {
namespace {

using testing::counterexample_graph;
using testing::set1;
using testing::tup;
using testing::vec;

std::set<std::string> as_strings(const std::vector<Vector>& roots) {
  std::set<std::string> s;
  for (const auto& r : roots) s.insert(format_vector(r));
  return s;
}

// The move table of the rank 7 example, by underlying set: the generator t
// and the set reached by the move.
const std::map<std::set<int>, std::map<int, std::set<int>>> kMoves = {
    {{4, 5}, {{3, {3, 4}}, {6, {5, 6}}, {7, {5, 7}}}},
    {{3, 4}, {{1, {1, 3}}, {2, {2, 3}}, {5, {4, 5}}}},
    {{5, 6}, {{4, {4, 5}}, {7, {5, 7}}}},
    {{5, 7}, {{4, {4, 5}}, {6, {5, 6}}}},
    {{1, 3}, {{2, {2, 3}}, {4, {3, 4}}}},
    {{2, 3}, {{1, {1, 3}}, {4, {3, 4}}}},
};

// Roots orthogonal to the set in each row of the same table.
std::map<std::set<int>, std::vector<Vector>> perp_rows() {
  Vector a1 = vec({1, 0, 0, 0, 0, 0, 0});
  Vector a2 = vec({0, 1, 0, 0, 0, 0, 0});
  return {
      {{4, 5}, {a1, a2}},
      {{5, 6}, {a1, a2}},
      {{5, 7}, {a1, a2}},
      {{3, 4}, {vec({1, 0, 1, 1, 1, 0, 0}), vec({0, 1, 1, 1, 1, 0, 0})}},
      {{1, 3}, {vec({0, 0, 0, 0, 1, 0, 0}), vec({1, 1, 2, 2, 1, 0, 0})}},
      {{2, 3}, {vec({0, 0, 0, 0, 1, 0, 0}), vec({1, 1, 2, 2, 1, 0, 0})}},
  };
}

std::set<int> one_based(GeneratorSet s) {
  std::set<int> out;
  for (int i : s) out.insert(i + 1);
  return out;
}

TEST(Centralizer, TupleBasics) {
  EXPECT_THROW(Tuple({1, 1}), PreconditionError);
  Tuple t = tup({5, 4});
  EXPECT_EQ(t.set(), set1({4, 5}));
  EXPECT_EQ(to_string(t), "(5,4)");
  EXPECT_EQ(parse_tuple("5,4", 7), t);
  EXPECT_THROW(parse_tuple("5,5", 7), Error);
  EXPECT_EQ(Tuple::of(set1({5, 4})), tup({4, 5}));
}

TEST(Centralizer, CounterexampleMoveTable) {
  Representation rep(counterexample_graph());
  MoveCache cache(rep);
  Groupoid g = build_groupoid(cache, tup({4, 5}));
  ASSERT_FALSE(g.truncated);
  EXPECT_EQ(g.nodes.size(), 12U);
  std::set<std::set<int>> sets;
  for (const auto& y : g.nodes) sets.insert(one_based(y.set()));
  EXPECT_EQ(sets.size(), 6U);
  std::map<std::set<int>, std::map<int, std::set<int>>> seen;
  for (const auto& e : g.edges) {
    seen[one_based(g.nodes[e.source].set())][e.t + 1] = one_based(g.nodes[e.target].set());
  }
  EXPECT_EQ(seen, kMoves);
}

TEST(Centralizer, CounterexamplePerpRowsAndClosure) {
  Representation rep(counterexample_graph());
  MoveCache cache(rep);
  Groupoid g = build_groupoid(cache, tup({4, 5}));
  auto rows = perp_rows();
  Vector a1 = rep.simple_root(0);
  Vector a2 = rep.simple_root(1);
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& row = rows.at(one_based(g.nodes[v].set()));
    EXPECT_EQ(as_strings({apply_path(g, static_cast<int>(v), a1), apply_path(g, static_cast<int>(v), a2)}),
              as_strings(row))
        << to_string(g.nodes[v]);
    for (const auto& r : row) EXPECT_TRUE(is_orthogonal_to(rep, r, g.nodes[v].set()));
  }
  // w_y^t carries the row of [y] onto the row of [phi(y,t)].
  for (const auto& e : g.edges) {
    std::vector<Vector> images;
    for (const auto& v : rows.at(one_based(g.nodes[e.source].set()))) images.push_back(e.element->apply(v));
    EXPECT_EQ(as_strings(images), as_strings(rows.at(one_based(g.nodes[e.target].set()))));
  }
}

TEST(Centralizer, CounterexampleRefutes) {
  Representation rep(counterexample_graph());
  CentralizerReport r = verify_main_theorem(rep, set1({4, 5}));
  EXPECT_FALSE(r.hypothesis);
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(as_strings({r.perp.roots[0].coords(), r.perp.roots[1].coords()}),
            as_strings({rep.simple_root(0), rep.simple_root(1)}));
  EXPECT_EQ(r.perp.roots.size(), 2U);
  EXPECT_FALSE(r.generators.empty());
  EXPECT_FALSE(r.conclusion);
  EXPECT_EQ(r.outcome(), Outcome::refuted);
  // The loop generators swap alpha_1 and alpha_2 and have infinite order.
  for (const auto& lg : r.generators) {
    EXPECT_TRUE(is_in_Y(rep, lg.element, tup({4, 5}), tup({4, 5})));
    Element p = lg.element;
    for (int k = 1; k <= 20; ++k) {
      ASSERT_FALSE(p.is_identity()) << k;
      p = p * lg.element;
    }
  }
}

TEST(Centralizer, SingleGeneratorIsVerified) {
  Representation rep(counterexample_graph());
  CentralizerReport r = verify_main_theorem(rep, set1({4}));
  EXPECT_TRUE(r.hypothesis);
  EXPECT_EQ(r.outcome(), Outcome::verified);
}

TEST(Centralizer, WholeGeneratingSet) {
  Representation rep(make_graph("D5"));
  MoveCache cache(rep);
  Groupoid g = build_groupoid(cache, Tuple::of(GeneratorSet::all(5)));
  EXPECT_EQ(g.nodes.size(), 1U);
  EXPECT_TRUE(g.edges.empty());
}

TEST(Centralizer, GammaExamples) {
  Representation rep(counterexample_graph());
  EXPECT_EQ(gamma_root(rep, tup({4, 5}), 0)->coords(), rep.simple_root(0));
  EXPECT_FALSE(gamma_root(rep, tup({4, 5}), 2).has_value());
  EXPECT_EQ(gamma_root(rep, tup({1, 3}), 4)->coords(), vec({0, 0, 0, 0, 1, 0, 0}));

  // B2 and G2 style: the unique positive root orthogonal to alpha_1.
  for (const char* name : {"B2", "I2(6)"}) {
    Representation d(make_graph(name));
    auto gamma = gamma_root(d, tup({1}), 1);
    ASSERT_TRUE(gamma) << name;
    std::vector<Root> brute;
    for (const auto& r : positive_roots(d, GeneratorSet::all(2))) {
      if (d.pairing_simple(0, r.coords()).is_zero()) brute.push_back(r);
    }
    ASSERT_EQ(brute.size(), 1U) << name;
    EXPECT_EQ(*gamma, brute[0]) << name;
  }
}

TEST(Centralizer, MoveUnavailable) {
  Representation rep(counterexample_graph());
  MoveCache cache(rep);
  EXPECT_THROW(cache.elementary(tup({4, 5}), 3), MoveUnavailable);
  // {3} u {6} joined by an infinite edge.
  EXPECT_FALSE(cache.available(tup({3}), 5));
  EXPECT_THROW(cache.elementary(tup({3}), 5), MoveUnavailable);
}

// Every available move lies in C, and in Y unless it is a self-loop. Its
// length is l(w0(K)) - l(w0(K \ {t})); gamma exists exactly for self-loops.
TEST(Centralizer, MovePropertiesOnRandomGraphs) {
  testing::Rng rng(23);
  int moves = 0;
  int loops = 0;
  for (int it = 0; it < 150; ++it) {
    CoxeterGraph graph = testing::random_graph(rng);
    Representation rep(graph);
    MoveCache cache(rep);
    Tuple x = testing::random_tuple(rng, graph.size(), 3);
    if (!is_finite_type(graph, x.set())) continue;
    for (int t = 0; t < graph.size(); ++t) {
      if (x.set().contains(t) || !cache.available(x, t)) continue;
      Move m = cache.elementary(x, t);
      ++moves;
      // A self-loop is s_gamma with gamma orthogonal to [x], so only the other moves lie in Y.
      ASSERT_EQ(is_in_Y(rep, *m.element, m.target, x), !m.self_loop()) << format_graph(graph) << to_string(x);
      ASSERT_TRUE(is_in_C(*m.element, m.target, x));
      GeneratorSet k = tilde_closure(graph, x.set(), GeneratorSet::single(t));
      ASSERT_EQ(m.k, k);
      int expected = length(rep, longest_element(rep, k)) - length(rep, longest_element(rep, k - GeneratorSet::single(t)));
      ASSERT_EQ(length(rep, *m.element), expected);
      auto gamma = cache.gamma(x, t);
      ASSERT_EQ(gamma.has_value(), m.self_loop());
      std::vector<Root> perp_inversions;
      for (const auto& r : inversion_set(rep, *m.element)) {
        if (is_orthogonal_to(rep, r, x.set())) perp_inversions.push_back(r);
      }
      ASSERT_EQ(perp_inversions.size(), m.self_loop() ? 1U : 0U);
      if (gamma) {
        ASSERT_EQ(perp_inversions[0], *gamma);
      }
      if (gamma) {
        ++loops;
        ASSERT_TRUE(is_positive(*gamma));
        ASSERT_TRUE(is_orthogonal_to(rep, *gamma, x.set()));
        ASSERT_EQ(reflection(rep, *gamma), *m.element);
      }
    }
  }
  EXPECT_GT(moves, 100);
  EXPECT_GT(loops, 5);
}

// In a finite group Y_I is torsion-free, hence trivial: no loop generators,
// and Pi^I is the canonical simple system of the roots orthogonal to I.
TEST(Centralizer, FiniteGroupOracle) {
  Representation d7(make_graph("D7"));
  CentralizerReport r = verify_main_theorem(d7, set1({1, 2, 3}));
  ASSERT_TRUE(r.complete());
  EXPECT_TRUE(r.generators.empty());
  auto brute = canonical_simple_system(d7, perp_positive_roots(d7, GeneratorSet::all(7), set1({1, 2, 3})));
  std::vector<Vector> a, b;
  for (const auto& x : r.perp.roots) a.push_back(x.coords());
  for (const auto& x : brute) b.push_back(x.coords());
  EXPECT_EQ(as_strings(a), as_strings(b));
  EXPECT_EQ(r.outcome(), Outcome::verified);

  testing::Rng rng(29);
  const std::vector<std::string> types = {"A4", "B4", "D4", "D5", "E6", "F4", "H3", "A2"};
  for (int it = 0; it < 40; ++it) {
    Representation rep(make_graph(types[static_cast<std::size_t>(it) % types.size()]));
    GeneratorSet i = testing::random_subset(rng, rep.rank(), rep.rank());
    CentralizerReport ri = verify_main_theorem(rep, i);
    ASSERT_TRUE(ri.complete());
    ASSERT_TRUE(ri.generators.empty());
    auto perp = perp_positive_roots(rep, GeneratorSet::all(rep.rank()), i);
    std::vector<Vector> got, want;
    for (const auto& x : ri.perp.roots) got.push_back(x.coords());
    if (!perp.empty()) {
      for (const auto& x : canonical_simple_system(rep, perp)) want.push_back(x.coords());
    }
    ASSERT_EQ(as_strings(got), as_strings(want)) << to_string(i);
  }
}

// The groupoid component of x_I is the set of tuples y with
// w . alpha_{x_l} = alpha_{y_l} for some w in W, found by brute force.
TEST(Centralizer, GroupoidNodesMatchConjugateTuples) {
  for (const char* name : {"A3", "B3", "D4", "H3"}) {
    Representation rep(make_graph(name));
    auto elements = testing::brute_force_group(rep);
    for (const Tuple& x : {tup({1}), tup({1, 2}), tup({2, 3}), tup({1, 3})}) {
      std::set<Tuple> brute;
      for (const auto& w : elements) {
        std::vector<int> y;
        for (int s : x.generators()) y.push_back(simple_root_index(w.column(s)));
        if (std::find(y.begin(), y.end(), -1) == y.end()) brute.insert(Tuple(y));
      }
      MoveCache cache(rep);
      Groupoid g = build_groupoid(cache, x);
      std::set<Tuple> nodes(g.nodes.begin(), g.nodes.end());
      EXPECT_EQ(nodes, brute) << name << ' ' << to_string(x);
    }
  }
}

TEST(Centralizer, PathElementsAndTreePaths) {
  Representation rep(counterexample_graph());
  MoveCache cache(rep);
  Groupoid g = build_groupoid(cache, tup({4, 5}));
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
    Element p = path_element(cache, g, v);
    ASSERT_TRUE(is_in_Y(rep, p, g.nodes[static_cast<std::size_t>(v)], g.base));
    Vector a1 = rep.simple_root(0);
    ASSERT_EQ(apply_path_inverse(cache, g, v, apply_path(g, v, a1)), a1);
    auto path = g.tree_path(v);
    ASSERT_EQ(path.empty(), v == 0);
    if (!path.empty()) {
      ASSERT_EQ(g.edges[static_cast<std::size_t>(path.back())].target, v);
    }
  }
  EXPECT_EQ(g.find(tup({5, 4})), g.find(tup({5, 4})));
  EXPECT_EQ(g.find(tup({1, 2})), -1);
}

TEST(Centralizer, TruncationIsReported) {
  Representation rep(counterexample_graph());
  MoveCache cache(rep);
  GroupoidLimits limits;
  limits.max_nodes = 3;
  Groupoid g = build_groupoid(cache, tup({4, 5}), limits);
  EXPECT_TRUE(g.truncated);
  EXPECT_FALSE(g.truncation_reason.empty());
  CentralizerReport r = verify_main_theorem(rep, set1({4, 5}), limits);
  EXPECT_EQ(r.outcome(), Outcome::incomplete);
}

TEST(Centralizer, DefaultLimits) {
  EXPECT_EQ(default_limits(7, 2).max_nodes, 42U);
  EXPECT_EQ(default_limits(10, 5).max_nodes, 5000U);
}

TEST(Centralizer, IotaExample) {
  CoxeterGraph g = testing::iota_example_graph();
  GeneratorSet j = set1({1, 3, 4, 5, 6});
  EXPECT_EQ(iota(g, j), set1({1, 5, 6}));
  EXPECT_EQ(iota_bar(g, j), set1({1, 2, 5, 6, 7}));
  EXPECT_TRUE(iota(g, set1({3, 4})).empty());
  EXPECT_TRUE(iota_bar(g, set1({3, 4})).empty());
}

TEST(Centralizer, IotaBarIsTheNeighbourhoodOfIota) {
  testing::Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    CoxeterGraph g = testing::random_graph(rng);
    GeneratorSet j = testing::random_subset(rng, g.size(), g.size());
    GeneratorSet io = iota(g, j);
    GeneratorSet bar = iota_bar(g, j);
    ASSERT_TRUE(io.subset_of(j));
    ASSERT_TRUE(io.subset_of(bar));
    for (int s = 0; s < g.size(); ++s) {
      bool near = io.contains(s) || is_adjacent(g, GeneratorSet::single(s), io);
      ASSERT_EQ(bar.contains(s), near);
    }
    for (auto comp : components(g, j)) ASSERT_EQ(comp.subset_of(io), !is_finite_type(g, comp));
  }
}

TEST(Centralizer, SupportCheckAgainstBruteForce) {
  Representation rep(counterexample_graph());
  DepthWindow window = roots_up_to_depth(rep, 7);
  ASSERT_FALSE(window.truncated);
  for (GeneratorSet i : {set1({4, 5}), set1({4}), set1({3, 6}), set1({1, 2}), GeneratorSet{}}) {
    SupportCheck sc = perp_support_check(rep, i, 7);
    EXPECT_FALSE(sc.truncated);
    EXPECT_TRUE(sc.violations.empty()) << to_string(i);
    std::size_t count = 0;
    for (const auto& r : window.roots) count += is_orthogonal_to(rep, r, i);
    EXPECT_EQ(sc.checked, count) << to_string(i);
  }
  EXPECT_TRUE(perp_support_check(rep, set1({4}), 8, 100).truncated);
}

// The support check walks roots depth first; it must see exactly the
// breadth-first window, and its orthogonality test must agree with the field.
TEST(Centralizer, SupportCheckCoversWindowOnRandomGraphs) {
  testing::Rng rng(37);
  testing::GraphShape shape;
  shape.labels = {2, 3, 4, kInfinity};
  shape.max_nodes = 6;
  for (int trial = 0; trial < 60; ++trial) {
    Representation rep(testing::random_graph(rng, shape));
    const int bound = testing::uniform(rng, 0, 6);
    DepthWindow window = roots_up_to_depth(rep, bound, 50000);
    if (window.truncated) continue;
    EXPECT_EQ(perp_support_check(rep, GeneratorSet{}, bound, 50000).checked, window.roots.size());
    GeneratorSet i = testing::random_subset(rng, rep.rank(), 2);
    std::size_t count = 0;
    for (const auto& r : window.roots) count += is_orthogonal_to(rep, r, i);
    SupportCheck sc = perp_support_check(rep, i, bound, 50000);
    EXPECT_EQ(sc.checked, count) << to_string(i);
    EXPECT_FALSE(sc.truncated);
  }
}

TEST(Centralizer, FinitePartSplitsComponents) {
  Representation rep(parse_graph("nodes 3\nedge 1 2 inf\n"));
  std::vector<Root> roots = {Root(rep.simple_root(0)), Root(rep.simple_root(1)), Root(rep.simple_root(2))};
  FinitePart f = finite_part(rep, roots);
  ASSERT_EQ(f.components.size(), 2U);
  EXPECT_EQ(f.finite_indices, std::vector<int>{2});
  EXPECT_FALSE(f.types[0].has_value());
}

}  // namespace
}  // namespace coxeter
