#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coxeter/roots.hpp"

namespace coxeter::detail {

/// a + b*r2 with 64-bit parts.
struct Zr2 {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Zr2&, const Zr2&) = default;
};

/// Breadth-first depth window for graphs whose labels are 2, 3, 4 or
/// infinity. Every 2cos(pi/m) is then 0, 1, r2 or 2, so root coordinates
/// stay in Z[r2] and fit in a few machine words. Same order and cap
/// semantics as roots_up_to_depth.
class CompactWindow {
 public:
  /// nullopt when the graph has a label 5 or 6, or a coordinate overflows.
  static std::optional<CompactWindow> build(const CoxeterGraph& g, int bound, std::size_t max_roots);

  std::size_t size() const { return depths_.size(); }
  int depth(std::size_t i) const { return depths_[i]; }
  bool truncated() const { return truncated_; }
  /// <alpha_s, root i> = 0.
  bool orthogonal(std::size_t i, int s) const;
  /// Generators in the support of root i.
  GeneratorSet support(std::size_t i) const;
  Vector to_vector(std::size_t i) const;

 private:
  const Zr2* root(std::size_t i) const { return coords_.data() + i * static_cast<std::size_t>(n_); }

  int n_ = 0;
  /// 2cos(pi/m_st) for s != t, row-major.
  std::vector<Zr2> k_;
  std::vector<Zr2> coords_;
  std::vector<int> depths_;
  bool truncated_ = false;
};

/// Visits every positive root of depth <= bound exactly once, depth first:
/// each root beyond Pi is reached from its parent under the least s with
/// <alpha_s, root> > 0. Stops after `max_roots` visits. Returns nullopt in
/// the same cases as CompactWindow::build, otherwise whether it stopped early.
struct RootVisit {
  const Zr2* coords;
  /// <alpha_t, root> for every generator t.
  const Zr2* pairings;
  int depth;
  bool orthogonal(int s) const { return pairings[s] == Zr2{}; }
};
std::optional<bool> visit_roots(const CoxeterGraph& g, int bound, std::size_t max_roots,
                                const std::function<void(const RootVisit&)>& visit);

GeneratorSet support(int n, const Zr2* v);
Vector to_vector(int n, const Zr2* v);

}  // namespace coxeter::detail
