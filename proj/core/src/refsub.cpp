#include "coxeter/refsub.hpp"

#include <array>
#include <unordered_set>

#include "coxeter/error.hpp"

namespace coxeter {

int pair_order(const Representation& rep, const Root& beta, const Root& gamma) {
  FieldElem p = rep.pairing(beta.coords(), gamma.coords());
  if (p.is_zero()) return 2;
  if (p.sign() == Sign::positive) return 0;
  static const std::array<FieldElem, 4> minus_cos = {-cos_pi_over(3), -cos_pi_over(4), -cos_pi_over(5),
                                                     -cos_pi_over(6)};
  for (int m = 3; m <= 6; ++m) {
    if (p == minus_cos[static_cast<std::size_t>(m - 3)]) return m;
  }
  if ((p + FieldElem(1)).sign() != Sign::positive) return kInfinity;
  throw UnsupportedOrder("pairing " + p.to_string() + " of " + format_root(beta) + " and " +
                         format_root(gamma) + " is not -cos(pi/m) for a supported m");
}

bool is_root_basis(const Representation& rep, const std::vector<Root>& psi) {
  for (const auto& r : psi) {
    if (!is_positive(r)) throw PreconditionError("root basis test on non-positive root " + format_root(r));
  }
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = i + 1; j < psi.size(); ++j) {
      if (psi[i] == psi[j] || pair_order(rep, psi[i], psi[j]) == 0) return false;
    }
  }
  return true;
}

CoxeterGraph induced_coxeter_matrix(const Representation& rep, const std::vector<Root>& psi) {
  if (!is_root_basis(rep, psi)) throw PreconditionError("induced Coxeter matrix needs a root basis");
  const int n = static_cast<int>(psi.size());
  CoxeterGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.set_label(i, j, pair_order(rep, psi[i], psi[j]));
  }
  return g;
}

Vector reflect(const Representation& rep, const Vector& beta, const Vector& v) {
  FieldElem p = rep.pairing(beta, v);
  Vector r = v;
  if (p.is_zero()) return r;
  p.scale(Rational(2));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!beta[i].is_zero()) r[i].sub_product(p, beta[i]);
  }
  return r;
}

std::vector<Root> reflection_closure(const Representation& rep, const std::vector<Root>& psi,
                                     std::size_t max_roots) {
  // The orbit W(psi) . psi is closed under negation, so it suffices to keep
  // one representative of each pair +-gamma: the positive one.
  std::vector<Root> out;
  std::unordered_set<Vector, VectorHash> seen;
  auto add = [&](Vector v) {
    if (root_sign(v) == Sign::negative) {
      for (auto& x : v) x = -x;
    }
    if (seen.insert(v).second) {
      if (out.size() >= max_roots) {
        throw NotFiniteType("reflection closure exceeded " + std::to_string(max_roots) + " roots");
      }
      out.emplace_back(std::move(v));
    }
  };
  for (const auto& r : psi) add(r.coords());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& b : psi) add(reflect(rep, b.coords(), out[k].coords()));
  }
  return out;
}

std::vector<Root> subsystem_positive_roots(const Representation& rep, const std::vector<Root>& psi) {
  CoxeterGraph induced = induced_coxeter_matrix(rep, psi);
  if (!is_finite_type(induced, GeneratorSet::all(induced.size()))) {
    throw NotFiniteType("root basis generates an infinite reflection subgroup");
  }
  return reflection_closure(rep, psi);
}

std::vector<Root> canonical_simple_system(const Representation& rep, const std::vector<Root>& psi) {
  GeneratorSet supp;
  for (const auto& r : psi) supp = supp | support(r);
  if (!is_finite_type(rep.graph(), supp)) {
    throw NotFiniteType("canonical simple system: roots do not lie in a finite parabolic subsystem");
  }
  std::vector<Root> all = reflection_closure(rep, psi);
  std::vector<Root> simple;
  for (const auto& g : all) {
    bool ok = true;
    for (const auto& d : all) {
      if (d == g) continue;
      if (root_sign(reflect(rep, g.coords(), d.coords())) == Sign::negative) {
        ok = false;
        break;
      }
    }
    if (ok) simple.push_back(g);
  }
  return simple;
}

bool is_orthogonal_to(const Representation& rep, const Vector& gamma, GeneratorSet k) {
  for (int s : k) {
    if (!rep.pairing_simple(s, gamma).is_zero()) return false;
  }
  return true;
}

std::vector<Root> perp_positive_roots(const Representation& rep, GeneratorSet j, GeneratorSet k) {
  std::vector<Root> out;
  for (auto& r : positive_roots(rep, j)) {
    if (is_orthogonal_to(rep, r, k)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coxeter
