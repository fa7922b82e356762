#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/field.hpp"
#include "coxeter/graph.hpp"

namespace coxeter {

/// Coordinates over the simple-root basis.
using Vector = std::vector<FieldElem>;
/// Generator indices, 0-based; the word [i1,...,ik] means s_i1 * ... * s_ik.
using Word = std::vector<int>;
using Matrix = std::vector<Vector>;

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

/// Symmetric matrix of the invariant form: 1 on the diagonal, -cos(pi/m)
/// off it, -1 for m = infinity.
Matrix gram(const CoxeterGraph& g);

/// The geometric representation of (W,S): the graph together with its
/// bilinear form. Immutable.
class Representation {
 public:
  explicit Representation(CoxeterGraph g);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return graph_.size(); }
  const FieldElem& form(int s, int t) const { return gram_[s][t]; }
  const Matrix& gram_matrix() const { return gram_; }

  /// <alpha_s, v>.
  FieldElem pairing_simple(int s, const Vector& v) const;
  FieldElem pairing(const Vector& u, const Vector& v) const;
  /// s . v = v - 2 <alpha_s, v> alpha_s; only coordinate s changes.
  void reflect_simple_in_place(int s, Vector& v) const;
  Vector reflect_simple(int s, Vector v) const;
  Vector simple_root(int s) const;
  Vector zero() const { return Vector(static_cast<std::size_t>(rank())); }

 private:
  CoxeterGraph graph_;
  Matrix gram_;
};

/// A root: an element of W . Pi, stored by its coordinates.
class Root {
 public:
  Root() = default;
  explicit Root(Vector coords) : coords_(std::move(coords)) {}
  const Vector& coords() const { return coords_; }
  const FieldElem& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  Root operator-() const;
  friend bool operator==(const Root&, const Root&) = default;

 private:
  Vector coords_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept { return VectorHash{}(r.coords()); }
};

/// A group element, stored as the matrix of its action on V: column t is
/// w . alpha_t in the simple-root basis.
class Element {
 public:
  Element() = default;
  static Element identity(int n);
  static Element simple(const Representation& rep, int s);
  static Element from_word(const Representation& rep, const Word& word);
  static Element from_columns(std::vector<Vector> columns);

  int rank() const { return static_cast<int>(cols_.size()); }
  const Vector& column(int t) const { return cols_[t]; }
  Vector apply(const Vector& v) const;
  Root apply(const Root& r) const { return Root(apply(r.coords())); }

  Element operator*(const Element& other) const;
  /// this * s
  Element times_simple(const Representation& rep, int s) const;
  /// s * this
  Element simple_times(const Representation& rep, int s) const;
  /// Exact inverse by Gauss-Jordan elimination over the field.
  Element inverse() const;
  bool is_identity() const;

  friend bool operator==(const Element&, const Element&) = default;
  std::size_t hash() const;

 private:
  std::vector<Vector> cols_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

/// Exact action w . v.
inline Vector act(const Element& w, const Vector& v) { return w.apply(v); }

/// Sign of a root: positive if every coordinate is >= 0, negative if every
/// coordinate is <= 0. Mixed or zero vectors raise InvariantViolation.
Sign root_sign(const Vector& v);
bool is_positive(const Vector& v);
inline bool is_positive(const Root& r) { return is_positive(r.coords()); }

/// s if v = alpha_s, -1 otherwise.
int simple_root_index(const Vector& v);

/// Indices of the nonzero coordinates.
GeneratorSet support(const Vector& v);
inline GeneratorSet support(const Root& r) { return support(r.coords()); }

/// s_gamma, v -> v - 2 <gamma, v> gamma. Throws InvalidRoot unless
/// <gamma, gamma> = 1.
Element reflection(const Representation& rep, const Vector& gamma);
inline Element reflection(const Representation& rep, const Root& gamma) {
  return reflection(rep, gamma.coords());
}

/// Greedy descent with least-index tie-breaking; the returned word
/// multiplies back to w.
Word reduced_word(const Representation& rep, const Element& w);
int length(const Representation& rep, const Element& w);

/// Phi[w] = { gamma > 0 : w . gamma < 0 }, enumerated from a reduced word.
std::vector<Root> inversion_set(const Representation& rep, const Element& w);
std::vector<Root> inversion_set(const Representation& rep, const Word& reduced);

/// Longest element of W_I by repeated ascent. NotFiniteType if |W_I| is
/// infinite.
Element longest_element(const Representation& rep, GeneratorSet i);

/// Positive roots of Phi_J in breadth-first discovery order from Pi_J
/// (generators tried in increasing index). NotFiniteType if J is not of
/// finite type.
std::vector<Root> positive_roots(const Representation& rep, GeneratorSet j);

/// Positive roots of a finite parabolic subsystem together with their
/// heights and the action of each generator of J.
struct RootTable {
  static constexpr int kFixed = -1;   // r_j . gamma = gamma
  static constexpr int kSimple = -2;  // gamma = alpha_j
  GeneratorSet generators;
  std::vector<Root> roots;
  /// Depth: 1 for simple roots, and one more per simple reflection needed.
  std::vector<int> heights;
  /// actions[i][k] for the k-th generator of J (increasing order): index of
  /// r . gamma_i in `roots`, or kFixed / kSimple.
  std::vector<std::vector<int>> actions;
};
RootTable root_table(const Representation& rep, GeneratorSet j);

/// Positive roots reachable from Pi by at most `bound` simple reflections,
/// capped at `max_roots`. Always a window into Phi+, never a claim of
/// completeness for infinite W.
struct DepthWindow {
  std::vector<Root> roots;
  std::vector<int> depths;
  bool truncated = false;
};
DepthWindow roots_up_to_depth(const Representation& rep, int bound, std::size_t max_roots = 20000);

/// "[c1,c2,...]" using FieldElem rendering for each coordinate.
std::string format_vector(const Vector& v);
inline std::string format_root(const Root& r) { return format_vector(r.coords()); }
/// "s1 s2 ..." with 1-based indices, "1" for the empty word.
std::string format_word(const Word& w);

}  // namespace coxeter
