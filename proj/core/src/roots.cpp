#include "coxeter/roots.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "compact_window.hpp"
#include "coxeter/error.hpp"

namespace coxeter {

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Matrix gram(const CoxeterGraph& g) {
  const int n = g.size();
  Matrix b(n, Vector(n));
  for (int s = 0; s < n; ++s) {
    b[s][s] = FieldElem(1);
    for (int t = s + 1; t < n; ++t) {
      int m = g.label(s, t);
      FieldElem v = m == kInfinity ? FieldElem(-1) : -cos_pi_over(m);
      b[s][t] = v;
      b[t][s] = v;
    }
  }
  return b;
}

Representation::Representation(CoxeterGraph g) : graph_(std::move(g)), gram_(gram(graph_)) {}

FieldElem Representation::pairing_simple(int s, const Vector& v) const {
  FieldElem r;
  const Vector& row = gram_[s];
  for (int t = 0; t < rank(); ++t) {
    if (row[t].is_zero() || v[t].is_zero()) continue;
    r.add_product(row[t], v[t]);
  }
  return r;
}

FieldElem Representation::pairing(const Vector& u, const Vector& v) const {
  FieldElem r;
  for (int s = 0; s < rank(); ++s) {
    if (u[s].is_zero()) continue;
    r.add_product(u[s], pairing_simple(s, v));
  }
  return r;
}

void Representation::reflect_simple_in_place(int s, Vector& v) const {
  FieldElem p = pairing_simple(s, v);
  if (p.is_zero()) return;
  p.scale(Rational(2));
  v[s] -= p;
}

Vector Representation::reflect_simple(int s, Vector v) const {
  reflect_simple_in_place(s, v);
  return v;
}

Vector Representation::simple_root(int s) const {
  Vector v = zero();
  v[s] = FieldElem(1);
  return v;
}

Root Root::operator-() const {
  Vector v = coords_;
  for (auto& x : v) x = -x;
  return Root(std::move(v));
}

Element Element::identity(int n) {
  Element e;
  e.cols_.assign(n, Vector(n));
  for (int i = 0; i < n; ++i) e.cols_[i][i] = FieldElem(1);
  return e;
}

Element Element::simple(const Representation& rep, int s) {
  return identity(rep.rank()).times_simple(rep, s);
}

Element Element::from_word(const Representation& rep, const Word& word) {
  Element e = identity(rep.rank());
  for (int s : word) {
    if (s < 0 || s >= rep.rank()) throw PreconditionError("generator index out of range in word");
    e = e.times_simple(rep, s);
  }
  return e;
}

Element Element::from_columns(std::vector<Vector> columns) {
  Element e;
  e.cols_ = std::move(columns);
  return e;
}

Vector Element::apply(const Vector& v) const {
  const int n = rank();
  Vector r(n);
  for (int t = 0; t < n; ++t) {
    if (v[t].is_zero()) continue;
    const Vector& col = cols_[t];
    for (int i = 0; i < n; ++i) {
      if (!col[i].is_zero()) r[i].add_product(v[t], col[i]);
    }
  }
  return r;
}

Element Element::operator*(const Element& other) const {
  Element e;
  e.cols_.reserve(other.cols_.size());
  for (const auto& col : other.cols_) e.cols_.push_back(apply(col));
  return e;
}

Element Element::times_simple(const Representation& rep, int s) const {
  // (w s) . alpha_t = w . alpha_t - 2 <alpha_s, alpha_t> w . alpha_s
  Element e = *this;
  const Vector& ws = cols_[s];
  for (int t = 0; t < rank(); ++t) {
    const FieldElem& b = rep.form(s, t);
    if (b.is_zero()) continue;
    FieldElem c = b;
    c.scale(Rational(2));
    for (int i = 0; i < rank(); ++i) {
      if (!ws[i].is_zero()) e.cols_[t][i].sub_product(c, ws[i]);
    }
  }
  return e;
}

Element Element::simple_times(const Representation& rep, int s) const {
  Element e = *this;
  for (auto& col : e.cols_) rep.reflect_simple_in_place(s, col);
  return e;
}

Element Element::inverse() const {
  const int n = rank();
  // Row-major copies of [A | I].
  std::vector<Vector> a(n, Vector(n)), inv(n, Vector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cols_[j][i];
    inv[i][i] = FieldElem(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw InvariantViolation("element matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    FieldElem f = a[c][c].inverse();
    for (int j = 0; j < n; ++j) {
      a[c][j] *= f;
      inv[c][j] *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      FieldElem m = a[r][c];
      for (int j = 0; j < n; ++j) {
        if (!a[c][j].is_zero()) a[r][j].sub_product(m, a[c][j]);
        if (!inv[c][j].is_zero()) inv[r][j].sub_product(m, inv[c][j]);
      }
    }
  }
  Element e;
  e.cols_.assign(n, Vector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e.cols_[j][i] = inv[i][j];
  }
  return e;
}

bool Element::is_identity() const {
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j ? !cols_[j][i].is_one() : !cols_[j][i].is_zero()) return false;
    }
  }
  return true;
}

std::size_t Element::hash() const {
  std::size_t h = 0;
  VectorHash vh;
  for (const auto& col : cols_) h = h * 1000003U ^ vh(col);
  return h;
}

Sign root_sign(const Vector& v) {
  bool pos = false, neg = false;
  for (const auto& x : v) {
    switch (x.sign()) {
      case Sign::positive: pos = true; break;
      case Sign::negative: neg = true; break;
      case Sign::zero: break;
    }
    if (pos && neg) throw InvariantViolation("vector " + format_vector(v) + " has mixed signs");
  }
  if (!pos && !neg) throw InvariantViolation("zero vector is not a root");
  return pos ? Sign::positive : Sign::negative;
}

bool is_positive(const Vector& v) { return root_sign(v) == Sign::positive; }

int simple_root_index(const Vector& v) {
  int found = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (found >= 0 || !v[i].is_one()) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

GeneratorSet support(const Vector& v) {
  GeneratorSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.insert(static_cast<int>(i));
  }
  return s;
}

Element reflection(const Representation& rep, const Vector& gamma) {
  if (!rep.pairing(gamma, gamma).is_one()) {
    throw InvalidRoot("reflection: " + format_vector(gamma) + " is not a unit vector");
  }
  const int n = rep.rank();
  std::vector<Vector> cols;
  cols.reserve(n);
  for (int t = 0; t < n; ++t) {
    Vector col = rep.simple_root(t);
    FieldElem p = rep.pairing_simple(t, gamma);
    if (!p.is_zero()) {
      p.scale(Rational(2));
      for (int i = 0; i < n; ++i) {
        if (!gamma[i].is_zero()) col[i].sub_product(p, gamma[i]);
      }
    }
    cols.push_back(std::move(col));
  }
  return Element::from_columns(std::move(cols));
}

Word reduced_word(const Representation& rep, const Element& w) {
  Word descents;
  Element cur = w;
  for (;;) {
    int found = -1;
    for (int s = 0; s < rep.rank(); ++s) {
      if (root_sign(cur.column(s)) == Sign::negative) {
        found = s;
        break;
      }
    }
    if (found < 0) break;
    cur = cur.times_simple(rep, found);
    descents.push_back(found);
  }
  if (!cur.is_identity()) throw InvariantViolation("descent stopped before reaching the identity");
  // w s_a1 ... s_ak = 1, so w = s_ak ... s_a1.
  std::reverse(descents.begin(), descents.end());
  return descents;
}

int length(const Representation& rep, const Element& w) {
  return static_cast<int>(reduced_word(rep, w).size());
}

std::vector<Root> inversion_set(const Representation& rep, const Word& reduced) {
  // For w = s_1 ... s_k reduced, Phi[w] = { s_k ... s_{j+1} alpha_{s_j} }.
  std::vector<Root> out;
  out.reserve(reduced.size());
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    Vector v = rep.simple_root(reduced[j]);
    for (std::size_t i = j + 1; i < reduced.size(); ++i) rep.reflect_simple_in_place(reduced[i], v);
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<Root> inversion_set(const Representation& rep, const Element& w) {
  return inversion_set(rep, reduced_word(rep, w));
}

Element longest_element(const Representation& rep, GeneratorSet i) {
  if (!is_finite_type(rep.graph(), i)) {
    throw NotFiniteType("longest element requested for " + to_string(i) + ", which is not of finite type");
  }
  Element w = Element::identity(rep.rank());
  for (;;) {
    int found = -1;
    for (int s : i) {
      if (root_sign(w.column(s)) == Sign::positive) {
        found = s;
        break;
      }
    }
    if (found < 0) return w;
    w = w.times_simple(rep, found);
  }
}

RootTable root_table(const Representation& rep, GeneratorSet j) {
  if (!is_finite_type(rep.graph(), j)) {
    throw NotFiniteType("positive roots requested for " + to_string(j) + ", which is not of finite type");
  }
  RootTable table;
  table.generators = j;
  std::unordered_map<Vector, int, VectorHash> index;
  for (int s : j) {
    index.emplace(rep.simple_root(s), static_cast<int>(table.roots.size()));
    table.roots.emplace_back(rep.simple_root(s));
    table.heights.push_back(1);
  }
  for (std::size_t k = 0; k < table.roots.size(); ++k) {
    for (int s : j) {
      Vector v = rep.reflect_simple(s, table.roots[k].coords());
      if (v == table.roots[k].coords() || root_sign(v) == Sign::negative) continue;
      if (index.contains(v)) continue;
      index.emplace(v, static_cast<int>(table.roots.size()));
      table.roots.emplace_back(std::move(v));
      table.heights.push_back(table.heights[k] + 1);
    }
  }
  table.actions.resize(table.roots.size());
  for (std::size_t k = 0; k < table.roots.size(); ++k) {
    for (int s : j) {
      const Vector& g = table.roots[k].coords();
      Vector v = rep.reflect_simple(s, g);
      int a;
      if (v == g) {
        a = RootTable::kFixed;
      } else if (root_sign(v) == Sign::negative) {
        a = RootTable::kSimple;
      } else {
        a = index.at(v);
      }
      table.actions[k].push_back(a);
    }
  }
  return table;
}

std::vector<Root> positive_roots(const Representation& rep, GeneratorSet j) {
  return root_table(rep, j).roots;
}

DepthWindow roots_up_to_depth(const Representation& rep, int bound, std::size_t max_roots) {
  if (bound < 0) throw PreconditionError("depth bound must be nonnegative");
  DepthWindow out;
  if (auto fast = detail::CompactWindow::build(rep.graph(), bound, max_roots)) {
    out.truncated = fast->truncated();
    for (std::size_t i = 0; i < fast->size(); ++i) {
      out.roots.emplace_back(fast->to_vector(i));
      out.depths.push_back(fast->depth(i));
    }
    return out;
  }
  std::unordered_map<Vector, int, VectorHash> seen;
  const int n = rep.rank();
  for (int s = 0; s < n; ++s) {
    if (out.roots.size() >= max_roots) {
      out.truncated = true;
      return out;
    }
    seen.emplace(rep.simple_root(s), 0);
    out.roots.emplace_back(rep.simple_root(s));
    out.depths.push_back(0);
  }
  for (std::size_t k = 0; k < out.roots.size(); ++k) {
    if (out.depths[k] >= bound) continue;
    for (int s = 0; s < n; ++s) {
      Vector v = rep.reflect_simple(s, out.roots[k].coords());
      if (root_sign(v) == Sign::negative || seen.contains(v)) continue;
      if (out.roots.size() >= max_roots) {
        out.truncated = true;
        return out;
      }
      seen.emplace(v, out.depths[k] + 1);
      out.roots.emplace_back(std::move(v));
      out.depths.push_back(out.depths[k] + 1);
    }
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].to_string();
  }
  s += ']';
  return s;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(w[i] + 1);
  }
  return s;
}

}  // namespace coxeter
