#include "coxeter/decomp.hpp"

#include "coxeter/error.hpp"
#include "coxeter/refsub.hpp"

namespace coxeter {

namespace {

// w * y, or nullopt when some alpha_{y_l} is not sent to a simple root.
std::optional<Tuple> act_on_tuple(const Element& w, const Tuple& y) {
  std::vector<int> out;
  for (int s : y.generators()) {
    int i = simple_root_index(w.column(s));
    if (i < 0) return std::nullopt;
    out.push_back(i);
  }
  return Tuple(std::move(out));
}

std::optional<GeneratorSet> act_on_set(const Element& w, GeneratorSet j) {
  GeneratorSet out;
  for (int s : j) {
    int i = simple_root_index(w.column(s));
    if (i < 0) return std::nullopt;
    out.insert(i);
  }
  return out;
}

std::string gen(int s) { return "s" + std::to_string(s + 1); }

Factor make_factor(MoveCache& cache, GeneratorSet k, int t, const Tuple& y, GeneratorSet j) {
  Factor f;
  f.t = t;
  f.k = k;
  f.omega = *cache.element(k, t);
  f.word = reduced_word(cache.rep(), f.omega);
  f.kind = (k & (j - y.set())).empty() ? FactorKind::narrow : FactorKind::wide;
  return f;
}

}  // namespace

Decomposition standard_decomposition(const Representation& rep, const Element& u, const Tuple& y,
                                     const Tuple& z, GeneratorSet j) {
  if (y.size() != z.size()) throw PreconditionError("tuples y and z have different lengths");
  for (std::size_t l = 0; l < y.size(); ++l) {
    Vector img = u.apply(rep.simple_root(y[l]));
    if (simple_root_index(img) != z[l]) {
      throw PreconditionError("u is not in C_{z,y}: u . alpha_" + gen(y[l]) + " = " + format_vector(img) +
                              ", expected alpha_" + gen(z[l]));
    }
  }
  for (const auto& r : inversion_set(rep, u)) {
    if (is_orthogonal_to(rep, r, y.set())) {
      throw PreconditionError("u is not in Y_{z,y}: it sends " + format_root(r) +
                              ", orthogonal to [y], to a negative root");
    }
  }
  for (int s : j) {
    Vector img = u.apply(rep.simple_root(s));
    if (simple_root_index(img) < 0) {
      throw PreconditionError("u . alpha_" + gen(s) + " = " + format_vector(img) + " is not a simple root");
    }
  }

  MoveCache cache(rep);
  Decomposition d;
  d.tuples.push_back(y);
  d.sets.push_back(j);
  Element cur = u;
  while (!cur.is_identity()) {
    int t = -1;
    for (int s = 0; s < rep.rank(); ++s) {
      if (root_sign(cur.column(s)) == Sign::negative) {
        t = s;
        break;
      }
    }
    if (t < 0) throw InvariantViolation("non-identity element without a descent");
    const Tuple& yi = d.tuples.back();
    GeneratorSet ji = d.sets.back();
    GeneratorSet k = tilde_closure(rep.graph(), yi.set() | ji, GeneratorSet::single(t));
    if (!is_finite_type(rep.graph(), k)) {
      throw InvariantViolation("support " + to_string(k) + " of the next factor is not of finite type");
    }
    Factor f = make_factor(cache, k, t, yi, ji);
    auto next_y = act_on_tuple(f.omega, yi);
    auto next_j = act_on_set(f.omega, ji);
    if (!next_y || !next_j) throw InvariantViolation("factor does not carry simple roots to simple roots");
    cur = cur * *cache.inverse(k, t);
    d.tuples.push_back(*next_y);
    d.sets.push_back(*next_j);
    d.factors.push_back(std::move(f));
  }
  if (!(d.tuples.back() == z)) throw InvariantViolation("decomposition ends at " + to_string(d.tuples.back()));
  std::size_t total = 0;
  for (const auto& f : d.factors) total += f.word.size();
  if (total != static_cast<std::size_t>(length(rep, u))) {
    throw InvariantViolation("factor lengths do not add up to l(u)");
  }
  return d;
}

Element product(const Representation& rep, const Decomposition& d) {
  Element w = Element::identity(rep.rank());
  for (const auto& f : d.factors) w = f.omega * w;
  return w;
}

DecompositionCheck verify_semi_standard(const Representation& rep, const Decomposition& d) {
  DecompositionCheck c;
  auto fail = [&](std::size_t i, const std::string& what) {
    c.ok = false;
    c.violations.push_back("factor " + std::to_string(i) + ": " + what);
  };
  if (d.tuples.size() != d.size() + 1 || d.sets.size() != d.size() + 1) {
    c.ok = false;
    c.violations.push_back("metadata length does not match the number of factors");
    return c;
  }
  MoveCache cache(rep);
  const CoxeterGraph& g = rep.graph();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Factor& f = d.factors[i];
    const Tuple& y = d.tuples[i];
    GeneratorSet j = d.sets[i];
    GeneratorSet t = GeneratorSet::single(f.t);
    if (!(t & (y.set() | j)).empty()) fail(i, gen(f.t) + " lies in [y] u J");
    if (!is_adjacent(g, t, y.set())) fail(i, gen(f.t) + " is not adjacent to [y]");
    GeneratorSet k = tilde_closure(g, y.set() | j, t);
    if (!(k == f.k)) {
      fail(i, "support " + to_string(f.k) + " differs from " + to_string(k));
      continue;
    }
    if (!is_finite_type(g, k)) {
      fail(i, "support " + to_string(k) + " is not of finite type");
      continue;
    }
    if (!(f.omega == *cache.element(k, f.t))) fail(i, "element is not w0(K) w0(K \\ {t})");
    if (!is_in_Y(rep, f.omega, d.tuples[i + 1], y)) {
      fail(i, "not in Y_{" + to_string(d.tuples[i + 1]) + "," + to_string(y) + "}");
    }
    auto img = act_on_set(f.omega, j);
    if (!img || !(*img == d.sets[i + 1])) fail(i, "omega . Pi_J is not Pi_J'");
    FactorKind kind = (k & (j - y.set())).empty() ? FactorKind::narrow : FactorKind::wide;
    if (kind != f.kind) fail(i, "wide/narrow flag is wrong");
    bool moves = false;
    for (int s : k - t) {
      if (!(f.omega.column(s) == rep.simple_root(s))) {
        moves = true;
        break;
      }
    }
    if (!moves) fail(i, "fixes Pi_{K \\ {t}} pointwise");
  }
  return c;
}

bool is_standard(const Representation& rep, const Decomposition& d) {
  if (!verify_semi_standard(rep, d).ok) return false;
  std::size_t total = 0;
  for (const auto& f : d.factors) total += static_cast<std::size_t>(length(rep, f.omega));
  return total == static_cast<std::size_t>(length(rep, product(rep, d)));
}

Decomposition simplify(const Decomposition& d) {
  Decomposition out;
  out.tuples.push_back(d.tuples.front());
  out.sets.push_back(d.sets.front());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.tuples[i + 1].set() == d.tuples[i].set() && d.sets[i + 1] == d.sets[i]) continue;
    Factor f = d.factors[i];
    const Tuple& y = out.tuples.back();
    GeneratorSet j = out.sets.back();
    auto next_y = act_on_tuple(f.omega, y);
    auto next_j = act_on_set(f.omega, j);
    if (!next_y || !next_j) throw InvariantViolation("simplified factor does not carry simple roots to simple roots");
    f.kind = (f.k & (j - y.set())).empty() ? FactorKind::narrow : FactorKind::wide;
    out.tuples.push_back(*next_y);
    out.sets.push_back(*next_j);
    out.factors.push_back(std::move(f));
  }
  return out;
}

ShiftCheck check_shift(const Representation& rep, const Decomposition& d, int r, int s, int s_prime) {
  ShiftCheck c;
  auto pre = [&](bool ok, const std::string& what) {
    if (!ok) {
      c.preconditions = false;
      c.notes.push_back("precondition: " + what);
    }
  };
  const Tuple& y0 = d.tuples.front();
  const Tuple& yn = d.tuples.back();
  pre(y0.set().contains(r), gen(r) + " not in [y^(0)]");
  pre(d.sets.front().contains(s), gen(s) + " not in J^(0)");
  pre(d.sets.back().contains(s_prime), gen(s_prime) + " not in J^(n)");
  pre(!y0.set().contains(s), gen(s) + " already lies in [y^(0)]");
  pre(!yn.set().contains(s_prime), gen(s_prime) + " already lies in [y^(n)]");
  for (std::size_t i = 0; i < d.size(); ++i) {
    pre(is_apart(rep.graph(), d.factors[i].k, GeneratorSet::single(r)),
        "support of factor " + std::to_string(i) + " is not apart from " + gen(r));
  }
  Element u = product(rep, d);
  pre(u.column(s) == rep.simple_root(s_prime), "u * " + gen(s) + " != " + gen(s_prime));
  if (!c.preconditions) {
    c.conclusions = false;
    return c;
  }
  auto concl = [&](bool ok, const std::string& what) {
    if (!ok) {
      c.conclusions = false;
      c.notes.push_back("conclusion: " + what);
    }
  };
  concl(yn.set().contains(r), gen(r) + " not in [y^(n)]");
  concl(u.column(r) == rep.simple_root(r), "u does not fix alpha_" + gen(r));
  if (!c.conclusions) return c;
  auto replace = [&](const Tuple& t, int with) {
    std::vector<int> v = t.generators();
    for (int& x : v) {
      if (x == r) x = with;
    }
    return Tuple(std::move(v));
  };
  Tuple z = replace(y0, s);
  Tuple z_prime = replace(yn, s_prime);
  concl(is_in_Y(rep, u, z_prime, z), "u not in Y_{" + to_string(z_prime) + "," + to_string(z) + "}");
  return c;
}

}  // namespace coxeter
