#pragma once

#include <string>
#include <vector>

#include "coxeter/centralizer.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/roots.hpp"

namespace coxeter {

enum class FactorKind { wide, narrow };

/// omega_i = w0(K) w0(K \ {t}) with K = ([y^(i)] u J^(i))_{~t}.
struct Factor {
  int t = -1;
  GeneratorSet k;
  Element omega;
  Word word;
  FactorKind kind = FactorKind::narrow;
};

/// u = omega_{n-1} ... omega_1 omega_0 together with the tuples y^(0..n)
/// and the sets J^(0..n) it passes through.
struct Decomposition {
  std::vector<Tuple> tuples;
  std::vector<GeneratorSet> sets;
  std::vector<Factor> factors;

  std::size_t size() const { return factors.size(); }
};

/// Greedy construction: repeatedly split off omega for the least t with
/// u . alpha_t negative. Requires u in Y_{z,y} and u . Pi_J inside Pi
/// (PreconditionError naming the failing root otherwise). The lengths of
/// the factors add up to l(u); InvariantViolation if they do not.
Decomposition standard_decomposition(const Representation& rep, const Element& u, const Tuple& y,
                                     const Tuple& z, GeneratorSet j);

/// omega_{n-1} ... omega_0.
Element product(const Representation& rep, const Decomposition& d);

struct DecompositionCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks every condition of a semi-standard decomposition, plus that each
/// factor moves some simple root of K \ {t}. Violations are collected, not
/// thrown.
DecompositionCheck verify_semi_standard(const Representation& rep, const Decomposition& d);

/// Semi-standard and the factor lengths add up to the length of the product.
bool is_standard(const Representation& rep, const Decomposition& d);

/// Drops the factors that change neither [y] nor J and recomputes the
/// tuples and sets of what remains.
Decomposition simplify(const Decomposition& d);

/// Concrete instance of the shift statement: with r in [y^(0)] apart from
/// every support, s in J^(0), s' in J^(n) and u * s = s', checks that r stays
/// in [y^(n)], u fixes alpha_r, and u lies in Y_{z',z} where z, z' replace
/// r by s, s' in y^(0), y^(n).
struct ShiftCheck {
  bool preconditions = true;
  bool conclusions = true;
  std::vector<std::string> notes;
};
ShiftCheck check_shift(const Representation& rep, const Decomposition& d, int r, int s, int s_prime);

}  // namespace coxeter
