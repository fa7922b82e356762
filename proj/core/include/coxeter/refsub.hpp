#pragma once

#include <cstddef>
#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/roots.hpp"

namespace coxeter {

/// Order of s_beta s_gamma read off <beta, gamma>: 2 for orthogonal roots,
/// m when the pairing is -cos(pi/m) for m in 3..6, kInfinity when it is
/// <= -1, and 0 when the pairing is positive (the pair is not part of a
/// root basis). Throws UnsupportedOrder for any other value in (-1, 0).
int pair_order(const Representation& rep, const Root& beta, const Root& gamma);

/// Every element is a positive root and every pair satisfies the root-basis
/// condition. Throws PreconditionError on a non-positive element.
bool is_root_basis(const Representation& rep, const std::vector<Root>& psi);

/// Coxeter graph of W(psi) on the generators s_beta, in the order of psi.
/// Throws PreconditionError unless psi is a root basis.
CoxeterGraph induced_coxeter_matrix(const Representation& rep, const std::vector<Root>& psi);

/// (W(psi) . psi)^+ by closure under the reflections s_beta, beta in psi.
/// Throws NotFiniteType when the closure exceeds `max_roots`.
std::vector<Root> reflection_closure(const Representation& rep, const std::vector<Root>& psi,
                                     std::size_t max_roots = 20000);

/// Positive roots of the subsystem generated by a root basis of finite
/// type. Throws NotFiniteType if the induced matrix is not of finite type.
std::vector<Root> subsystem_positive_roots(const Representation& rep, const std::vector<Root>& psi);

/// Pi(psi): the roots gamma of (W(psi) . psi)^+ such that s_gamma maps every
/// other root of that set to a positive root. psi must lie in a finite
/// parabolic subsystem (NotFiniteType otherwise).
std::vector<Root> canonical_simple_system(const Representation& rep, const std::vector<Root>& psi);

/// Positive roots of Phi_J orthogonal to every alpha_s, s in K.
std::vector<Root> perp_positive_roots(const Representation& rep, GeneratorSet j, GeneratorSet k);

/// True iff <gamma, alpha_s> = 0 for every s in K.
bool is_orthogonal_to(const Representation& rep, const Vector& gamma, GeneratorSet k);
inline bool is_orthogonal_to(const Representation& rep, const Root& gamma, GeneratorSet k) {
  return is_orthogonal_to(rep, gamma.coords(), k);
}

/// s_beta . v without building the reflection matrix.
Vector reflect(const Representation& rep, const Vector& beta, const Vector& v);

}  // namespace coxeter
