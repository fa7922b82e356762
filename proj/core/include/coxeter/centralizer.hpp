#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/roots.hpp"

namespace coxeter {

/// An injective tuple of generators (lambda -> x_lambda), 0-based indices.
class Tuple {
 public:
  Tuple() = default;
  /// Throws PreconditionError on repeated generators.
  explicit Tuple(std::vector<int> generators);
  /// The generators of `set` in increasing order: the tuple x_I.
  static Tuple of(GeneratorSet set);

  std::size_t size() const { return gens_.size(); }
  int operator[](std::size_t lambda) const { return gens_[lambda]; }
  const std::vector<int>& generators() const { return gens_; }
  /// The underlying set [x].
  GeneratorSet set() const { return set_; }

  friend bool operator==(const Tuple& a, const Tuple& b) { return a.gens_ == b.gens_; }
  friend auto operator<=>(const Tuple& a, const Tuple& b) { return a.gens_ <=> b.gens_; }

 private:
  std::vector<int> gens_;
  GeneratorSet set_;
};

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

/// "(4,5)" with 1-based indices.
std::string to_string(const Tuple& t);
/// Parses "4,5" (1-based) into a tuple.
Tuple parse_tuple(std::string_view text, int n);

/// One application of x -> phi(x, t) together with w_x^t.
struct Move {
  Tuple source;
  int t = -1;
  Tuple target;
  /// [source]_{~t}
  GeneratorSet k;
  std::shared_ptr<const Element> element;
  bool self_loop() const { return source == target; }
};

/// Memoises longest elements and elementary elements. w_x^t depends only on
/// K = [x]_{~t} and t, so the number of distinct matrices stays small even
/// when the groupoid is large. Not thread-safe.
class MoveCache {
 public:
  explicit MoveCache(const Representation& rep) : rep_(&rep) {}
  const Representation& rep() const { return *rep_; }

  /// [x]_{~t} is of finite type (t not in [x] assumed).
  bool available(const Tuple& x, int t) const;
  /// Throws MoveUnavailable if t lies in [x] or [x]_{~t} is not of finite
  /// type; InvariantViolation if w_x^t does not carry Pi_[x] into Pi.
  Move elementary(const Tuple& x, int t);

  const Element& w0(GeneratorSet i);
  std::shared_ptr<const Element> element(GeneratorSet k, int t);
  std::shared_ptr<const Element> inverse(GeneratorSet k, int t);
  /// See gamma_root.
  std::optional<Root> gamma(const Tuple& x, int t);

 private:
  const Representation* rep_;
  std::unordered_map<std::uint64_t, Element> w0_;
  std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const Element>> elem_;
  std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const Element>> inv_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Root> gamma_;
};

Move elementary(const Representation& rep, const Tuple& x, int t);

/// gamma(x, t) when phi(x, t) = x: the unique positive root of
/// Phi_{[x] u {t}} orthogonal to [x]; nullopt when phi(x, t) != x.
/// Verifies s_gamma = w_x^t (InvariantViolation otherwise).
std::optional<Root> gamma_root(MoveCache& cache, const Tuple& x, int t);
std::optional<Root> gamma_root(const Representation& rep, const Tuple& x, int t);

/// w . alpha_{y_lambda} = alpha_{x_lambda} for every lambda.
bool is_in_C(const Element& w, const Tuple& x, const Tuple& y);
/// w is in C_{x,y} and no root of Phi[w] is orthogonal to Pi_[y].
bool is_in_Y(const Representation& rep, const Element& w, const Tuple& x, const Tuple& y);

struct GroupoidLimits {
  std::size_t max_nodes = 5000;
  std::size_t max_edges = 20000;
  std::size_t max_roots = 20000;
};

/// Node limit min(n!/(n-k)!, 5000) for tuples of length k in rank n.
GroupoidLimits default_limits(int n, int k);

/// The connected component of x_I in the groupoid whose objects are tuples
/// and whose arrows are the moves with phi(y,t) != y.
struct Groupoid {
  struct Edge {
    int source = -1;
    int t = -1;
    int target = -1;
    GeneratorSet k;
    std::shared_ptr<const Element> element;
    bool in_tree = false;
  };
  /// gamma(y,t) for a self-loop move at node y.
  struct PerpRoot {
    int node = -1;
    int t = -1;
    Root gamma;
  };

  Tuple base;
  std::vector<Tuple> nodes;
  std::unordered_map<Tuple, int, TupleHash> index;
  std::vector<Edge> edges;
  /// tree_edge[v] is the edge that discovered v; -1 for the base.
  std::vector<int> tree_edge;
  std::vector<PerpRoot> perp_roots;
  bool truncated = false;
  std::string truncation_reason;

  int find(const Tuple& y) const;
  /// Edge indices of the tree path from the base to `node`, base first.
  std::vector<int> tree_path(int node) const;
};

/// Breadth-first construction from x_I: nodes in discovery order, moves at
/// each node in increasing t. Every arrow is checked with is_in_Y.
Groupoid build_groupoid(MoveCache& cache, const Tuple& base, const GroupoidLimits& limits = {});

/// p_node . v, where p_node is the tree path element in Y_{node, base}.
Vector apply_path(const Groupoid& g, int node, Vector v);
/// p_node^{-1} . v.
Vector apply_path_inverse(MoveCache& cache, const Groupoid& g, int node, Vector v);
Element path_element(MoveCache& cache, const Groupoid& g, int node);

/// p_target^{-1} w_edge p_source for the arrows outside the spanning tree,
/// identities dropped. Each element lies in Y_I.
struct LoopGenerator {
  int edge = -1;
  Element element;
};
std::vector<LoopGenerator> y_loop_generators(MoveCache& cache, const Groupoid& g);

/// Candidate Pi^I: the conjugates p_y^{-1} . gamma(y,t) closed under the
/// loop generators. `complete` is set only when the closure reached a
/// fixpoint within the root limit and the groupoid was not truncated.
struct PerpRoots {
  std::vector<Root> roots;
  bool complete = false;
};
PerpRoots pi_perp_generators(MoveCache& cache, const Groupoid& g,
                             const std::vector<LoopGenerator>& generators,
                             std::size_t max_roots = 20000);

/// Components of the reflection subgroup with simple system `roots`.
struct FinitePart {
  CoxeterGraph matrix;
  std::vector<GeneratorSet> components;
  /// Classification of each component; nullopt for infinite ones.
  std::vector<std::optional<FiniteType>> types;
  /// Indices into the input of the roots in finite components.
  std::vector<int> finite_indices;
};
FinitePart finite_part(const Representation& rep, const std::vector<Root>& roots);

struct Verdict {
  int generator = -1;
  int root = -1;
  bool fixed = false;
  Root image;
};

enum class Outcome { verified, refuted, incomplete };

struct CentralizerReport {
  GeneratorSet subset;
  /// I is A_{>1}-free.
  bool hypothesis = false;
  Groupoid groupoid;
  std::vector<LoopGenerator> generators;
  PerpRoots perp;
  std::optional<FinitePart> finite;
  /// Set when the candidate Pi^I failed the root-basis test.
  std::string finite_part_error;
  std::vector<Verdict> verdicts;
  /// Every verdict fixed its root.
  bool conclusion = true;
  bool complete() const { return !groupoid.truncated && perp.complete && finite.has_value(); }
  Outcome outcome() const;
};

/// Runs the whole pipeline for x_I and records, for every loop generator w
/// and every finite-part root gamma, whether w . gamma = gamma.
CentralizerReport verify_main_theorem(const Representation& rep, GeneratorSet i,
                                      const GroupoidLimits& limits);
CentralizerReport verify_main_theorem(const Representation& rep, GeneratorSet i);

/// Union of the components of J that are not of finite type.
GeneratorSet iota(const CoxeterGraph& g, GeneratorSet j);
/// Generators not apart from iota(J).
GeneratorSet iota_bar(const CoxeterGraph& g, GeneratorSet j);

/// Roots of depth <= bound orthogonal to Pi_I whose support meets
/// iota_bar(I). Empty when the support reduction holds on the window.
struct SupportCheck {
  std::vector<Root> violations;
  std::size_t checked = 0;
  bool truncated = false;
};
SupportCheck perp_support_check(const Representation& rep, GeneratorSet i, int bound,
                                std::size_t max_roots = 20000);

}  // namespace coxeter
