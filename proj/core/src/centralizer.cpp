#include "coxeter/centralizer.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_set>

#include "compact_window.hpp"
#include "coxeter/error.hpp"
#include "coxeter/refsub.hpp"

namespace coxeter {

Tuple::Tuple(std::vector<int> generators) : gens_(std::move(generators)) {
  for (int s : gens_) {
    if (s < 0 || s >= GeneratorSet::kMaxGenerators) throw PreconditionError("tuple entry out of range");
    if (set_.contains(s)) throw PreconditionError("tuple repeats generator s" + std::to_string(s + 1));
    set_.insert(s);
  }
}

Tuple Tuple::of(GeneratorSet set) { return Tuple(set.to_vector()); }

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
  std::size_t h = t.size();
  for (int s : t.generators()) h = h * 131 + static_cast<std::size_t>(s);
  return h;
}

std::string to_string(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

Tuple parse_tuple(std::string_view text, int n) { return Tuple(parse_index_list(text, n)); }

bool MoveCache::available(const Tuple& x, int t) const {
  GeneratorSet k = tilde_closure(rep_->graph(), x.set(), GeneratorSet::single(t));
  return is_finite_type(rep_->graph(), k);
}

const Element& MoveCache::w0(GeneratorSet i) {
  auto it = w0_.find(i.bits());
  if (it == w0_.end()) it = w0_.emplace(i.bits(), longest_element(*rep_, i)).first;
  return it->second;
}

std::shared_ptr<const Element> MoveCache::element(GeneratorSet k, int t) {
  auto key = std::make_pair(k.bits(), t);
  auto it = elem_.find(key);
  if (it != elem_.end()) return it->second;
  GeneratorSet rest = k;
  rest.erase(t);
  auto e = std::make_shared<const Element>(w0(k) * w0(rest));
  elem_.emplace(key, e);
  return e;
}

std::shared_ptr<const Element> MoveCache::inverse(GeneratorSet k, int t) {
  auto key = std::make_pair(k.bits(), t);
  auto it = inv_.find(key);
  if (it != inv_.end()) return it->second;
  // Both longest elements are involutions.
  GeneratorSet rest = k;
  rest.erase(t);
  auto e = std::make_shared<const Element>(w0(rest) * w0(k));
  inv_.emplace(key, e);
  return e;
}

Move MoveCache::elementary(const Tuple& x, int t) {
  if (t < 0 || t >= rep_->rank()) throw MoveUnavailable("generator out of range");
  if (x.set().contains(t)) {
    throw MoveUnavailable("s" + std::to_string(t + 1) + " already lies in " + to_string(x));
  }
  GeneratorSet k = tilde_closure(rep_->graph(), x.set(), GeneratorSet::single(t));
  if (!is_finite_type(rep_->graph(), k)) {
    throw MoveUnavailable(to_string(k) + " = [" + to_string(x) + "]_~s" + std::to_string(t + 1) +
                          " is not of finite type");
  }
  Move m;
  m.source = x;
  m.t = t;
  m.k = k;
  m.element = element(k, t);
  std::vector<int> target;
  target.reserve(x.size());
  for (int s : x.generators()) {
    int y = simple_root_index(m.element->column(s));
    if (y < 0) throw InvariantViolation("w_x^t does not send alpha_s" + std::to_string(s + 1) + " to a simple root");
    target.push_back(y);
  }
  m.target = Tuple(std::move(target));
  return m;
}

std::optional<Root> MoveCache::gamma(const Tuple& x, int t) {
  Move m = elementary(x, t);
  if (!m.self_loop()) return std::nullopt;
  GeneratorSet inside = x.set() & m.k;
  auto key = std::make_pair(m.k.bits(), inside.bits());
  auto it = gamma_.find(key);
  if (it != gamma_.end()) return it->second;
  // Generators of [x] outside K are not adjacent to K, so orthogonality to
  // them is automatic on Phi_K.
  std::vector<Root> perp = perp_positive_roots(*rep_, m.k, inside);
  if (perp.size() != 1) {
    throw InvariantViolation("expected one positive root orthogonal to " + to_string(x) + " in " +
                             to_string(m.k) + ", found " + std::to_string(perp.size()));
  }
  if (!(reflection(*rep_, perp.front()) == *m.element)) {
    throw InvariantViolation("reflection along gamma(x,t) differs from w_x^t");
  }
  gamma_.emplace(key, perp.front());
  return perp.front();
}

Move elementary(const Representation& rep, const Tuple& x, int t) {
  MoveCache cache(rep);
  return cache.elementary(x, t);
}

std::optional<Root> gamma_root(MoveCache& cache, const Tuple& x, int t) { return cache.gamma(x, t); }

std::optional<Root> gamma_root(const Representation& rep, const Tuple& x, int t) {
  MoveCache cache(rep);
  return cache.gamma(x, t);
}

bool is_in_C(const Element& w, const Tuple& x, const Tuple& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (simple_root_index(w.column(y[l])) != x[l]) return false;
  }
  return true;
}

bool is_in_Y(const Representation& rep, const Element& w, const Tuple& x, const Tuple& y) {
  if (!is_in_C(w, x, y)) return false;
  for (const auto& r : inversion_set(rep, w)) {
    if (is_orthogonal_to(rep, r, y.set())) return false;
  }
  return true;
}

GroupoidLimits default_limits(int n, int k) {
  GroupoidLimits l;
  std::size_t nodes = 1;
  for (int i = 0; i < k && nodes < l.max_nodes; ++i) nodes *= static_cast<std::size_t>(n - i);
  l.max_nodes = std::min<std::size_t>(std::max<std::size_t>(nodes, 1), 5000);
  l.max_edges = std::min<std::size_t>(l.max_nodes * static_cast<std::size_t>(std::max(n - k, 1)), 20000);
  return l;
}

int Groupoid::find(const Tuple& y) const {
  auto it = index.find(y);
  return it == index.end() ? -1 : it->second;
}

std::vector<int> Groupoid::tree_path(int node) const {
  std::vector<int> path;
  while (tree_edge[node] >= 0) {
    path.push_back(tree_edge[node]);
    node = edges[tree_edge[node]].source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Groupoid build_groupoid(MoveCache& cache, const Tuple& base, const GroupoidLimits& limits) {
  const Representation& rep = cache.rep();
  Groupoid g;
  g.base = base;
  g.nodes.push_back(base);
  g.index.emplace(base, 0);
  g.tree_edge.push_back(-1);
  // is_in_Y for an arrow depends on K, t and the source set only.
  std::map<std::tuple<std::uint64_t, int, std::uint64_t>, bool> checked;

  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const Tuple y = g.nodes[v];
    for (int t = 0; t < rep.rank(); ++t) {
      if (y.set().contains(t) || !cache.available(y, t)) continue;
      Move m = cache.elementary(y, t);
      if (m.self_loop()) {
        g.perp_roots.push_back({static_cast<int>(v), t, *cache.gamma(y, t)});
        continue;
      }
      auto key = std::make_tuple(m.k.bits(), t, y.set().bits());
      auto ck = checked.find(key);
      if (ck == checked.end()) ck = checked.emplace(key, is_in_Y(rep, *m.element, m.target, y)).first;
      if (!ck->second) {
        throw InvariantViolation("arrow " + to_string(y) + " -> " + to_string(m.target) + " is not in Y");
      }
      if (g.edges.size() >= limits.max_edges) {
        g.truncated = true;
        g.truncation_reason = "edge limit " + std::to_string(limits.max_edges) + " reached";
        return g;
      }
      int target = g.find(m.target);
      bool fresh = target < 0;
      if (fresh) {
        if (g.nodes.size() >= limits.max_nodes) {
          g.truncated = true;
          g.truncation_reason = "node limit " + std::to_string(limits.max_nodes) + " reached";
          return g;
        }
        target = static_cast<int>(g.nodes.size());
        g.nodes.push_back(m.target);
        g.index.emplace(m.target, target);
        g.tree_edge.push_back(static_cast<int>(g.edges.size()));
      }
      g.edges.push_back({static_cast<int>(v), t, target, m.k, m.element, fresh});
    }
  }
  return g;
}

Vector apply_path(const Groupoid& g, int node, Vector v) {
  for (int e : g.tree_path(node)) v = g.edges[e].element->apply(v);
  return v;
}

Vector apply_path_inverse(MoveCache& cache, const Groupoid& g, int node, Vector v) {
  while (g.tree_edge[node] >= 0) {
    const auto& e = g.edges[g.tree_edge[node]];
    v = cache.inverse(e.k, e.t)->apply(v);
    node = e.source;
  }
  return v;
}

Element path_element(MoveCache& cache, const Groupoid& g, int node) {
  const Representation& rep = cache.rep();
  std::vector<Vector> cols;
  for (int i = 0; i < rep.rank(); ++i) cols.push_back(apply_path(g, node, rep.simple_root(i)));
  return Element::from_columns(std::move(cols));
}

std::vector<LoopGenerator> y_loop_generators(MoveCache& cache, const Groupoid& g) {
  const Representation& rep = cache.rep();
  std::vector<LoopGenerator> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.in_tree) continue;
    std::vector<Vector> cols;
    for (int i = 0; i < rep.rank(); ++i) {
      Vector v = apply_path(g, edge.source, rep.simple_root(i));
      v = edge.element->apply(v);
      cols.push_back(apply_path_inverse(cache, g, edge.target, std::move(v)));
    }
    Element w = Element::from_columns(std::move(cols));
    if (w.is_identity()) continue;
    if (!is_in_Y(rep, w, g.base, g.base)) {
      throw InvariantViolation("loop generator at arrow " + std::to_string(e) + " is not in Y_I");
    }
    out.push_back({static_cast<int>(e), std::move(w)});
  }
  return out;
}

PerpRoots pi_perp_generators(MoveCache& cache, const Groupoid& g,
                             const std::vector<LoopGenerator>& generators, std::size_t max_roots) {
  PerpRoots out;
  std::unordered_set<Vector, VectorHash> seen;
  auto add = [&](Vector v) {
    if (root_sign(v) != Sign::positive) {
      throw InvariantViolation("conjugate of a perpendicular root is negative: " + format_vector(v));
    }
    if (!seen.insert(v).second) return true;
    if (out.roots.size() >= max_roots) return false;
    out.roots.emplace_back(std::move(v));
    return true;
  };
  for (const auto& p : g.perp_roots) {
    if (!add(apply_path_inverse(cache, g, p.node, p.gamma.coords()))) return out;
  }
  for (std::size_t k = 0; k < out.roots.size(); ++k) {
    for (const auto& w : generators) {
      if (!add(w.element.apply(out.roots[k].coords()))) return out;
    }
  }
  out.complete = !g.truncated;
  return out;
}

FinitePart finite_part(const Representation& rep, const std::vector<Root>& roots) {
  FinitePart fp;
  fp.matrix = induced_coxeter_matrix(rep, roots);
  fp.components = components(fp.matrix, GeneratorSet::all(fp.matrix.size()));
  for (auto c : fp.components) {
    fp.types.push_back(classify(fp.matrix, c));
    if (fp.types.back()) {
      for (int i : c) fp.finite_indices.push_back(i);
    }
  }
  std::sort(fp.finite_indices.begin(), fp.finite_indices.end());
  return fp;
}

Outcome CentralizerReport::outcome() const {
  if (!complete()) return Outcome::incomplete;
  return conclusion ? Outcome::verified : Outcome::refuted;
}

CentralizerReport verify_main_theorem(const Representation& rep, GeneratorSet i, const GroupoidLimits& limits) {
  CentralizerReport r;
  r.subset = i;
  r.hypothesis = is_a_gt1_free(rep.graph(), i);
  MoveCache cache(rep);
  r.groupoid = build_groupoid(cache, Tuple::of(i), limits);
  r.generators = y_loop_generators(cache, r.groupoid);
  r.perp = pi_perp_generators(cache, r.groupoid, r.generators, limits.max_roots);
  // A truncated candidate is not a root basis of anything; leave the report incomplete.
  if (!r.perp.complete) return r;
  try {
    r.finite = finite_part(rep, r.perp.roots);
  } catch (const PreconditionError& e) {
    r.finite_part_error = e.what();
    return r;
  }
  for (std::size_t g = 0; g < r.generators.size(); ++g) {
    for (int idx : r.finite->finite_indices) {
      Verdict v;
      v.generator = static_cast<int>(g);
      v.root = idx;
      v.image = r.generators[g].element.apply(r.perp.roots[idx]);
      v.fixed = v.image == r.perp.roots[idx];
      r.conclusion = r.conclusion && v.fixed;
      r.verdicts.push_back(std::move(v));
    }
  }
  return r;
}

CentralizerReport verify_main_theorem(const Representation& rep, GeneratorSet i) {
  return verify_main_theorem(rep, i, default_limits(rep.rank(), i.size()));
}

GeneratorSet iota(const CoxeterGraph& g, GeneratorSet j) {
  GeneratorSet out;
  for (auto c : components(g, j)) {
    if (!classify(g, c)) out = out | c;
  }
  return out;
}

GeneratorSet iota_bar(const CoxeterGraph& g, GeneratorSet j) {
  GeneratorSet inf = iota(g, j);
  GeneratorSet out;
  for (int s = 0; s < g.size(); ++s) {
    if (!is_apart(g, GeneratorSet::single(s), inf)) out.insert(s);
  }
  return out;
}

SupportCheck perp_support_check(const Representation& rep, GeneratorSet i, int bound, std::size_t max_roots) {
  SupportCheck out;
  GeneratorSet allowed = GeneratorSet::all(rep.rank()) - iota_bar(rep.graph(), i);
  const int n = rep.rank();
  auto fast = detail::visit_roots(rep.graph(), bound, max_roots, [&](const detail::RootVisit& v) {
    for (int s : i) {
      if (!v.orthogonal(s)) return;
    }
    ++out.checked;
    if (!detail::support(n, v.coords).subset_of(allowed)) out.violations.emplace_back(detail::to_vector(n, v.coords));
  });
  if (fast) {
    out.truncated = *fast;
    return out;
  }
  out = SupportCheck{};
  DepthWindow window = roots_up_to_depth(rep, bound, max_roots);
  out.truncated = window.truncated;
  for (const auto& r : window.roots) {
    if (!is_orthogonal_to(rep, r, i)) continue;
    ++out.checked;
    if (!support(r).subset_of(allowed)) out.violations.push_back(r);
  }
  return out;
}

}  // namespace coxeter
