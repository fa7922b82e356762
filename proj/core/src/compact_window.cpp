#include "compact_window.hpp"

#include <algorithm>
#include <unordered_set>

namespace coxeter::detail {

namespace {

struct Overflow {};

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Overflow{};
  return r;
}

std::int64_t twice(std::int64_t x) { return add(x, x); }

Zr2 operator+(Zr2 x, Zr2 y) { return {add(x.a, y.a), add(x.b, y.b)}; }

// k * x for k in {0, 1, r2, 2}.
Zr2 times(Zr2 k, Zr2 x) {
  if (k.a == 0 && k.b == 0) return {};
  if (k.b == 1) return {twice(x.b), x.a};
  if (k.a == 1) return x;
  return {twice(x.a), twice(x.b)};
}

// Sign of a + b r2.
int sign(Zr2 x) {
  if (x.a >= 0 && x.b >= 0) return (x.a || x.b) ? 1 : 0;
  if (x.a <= 0 && x.b <= 0) return -1;
  std::int64_t a2, b2;
  if (__builtin_mul_overflow(x.a, x.a, &a2) || __builtin_mul_overflow(x.b, x.b, &b2)) throw Overflow{};
  b2 = twice(b2);
  return x.a > 0 ? (a2 > b2 ? 1 : -1) : (a2 > b2 ? -1 : 1);
}

}  // namespace

std::optional<CompactWindow> CompactWindow::build(const CoxeterGraph& g, int bound, std::size_t max_roots) {
  const int n = g.size();
  CompactWindow w;
  w.n_ = n;
  w.k_.resize(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      Zr2& k = w.k_[static_cast<std::size_t>(s) * n + t];
      switch (g.label(s, t)) {
        case 2: k = {0, 0}; break;
        case 3: k = {1, 0}; break;
        case 4: k = {0, 1}; break;
        case kInfinity: k = {2, 0}; break;
        default: return std::nullopt;
      }
    }
  }

  const std::size_t width = static_cast<std::size_t>(n);
  auto hash = [&w, width](std::size_t i) {
    std::size_t h = 0;
    const Zr2* r = w.root(i);
    for (std::size_t c = 0; c < width; ++c) {
      h = h * 1000003u ^ static_cast<std::size_t>(r[c].a);
      h = h * 1000003u ^ static_cast<std::size_t>(r[c].b);
    }
    return h;
  };
  auto equal = [&w, width](std::size_t i, std::size_t j) {
    const Zr2* x = w.root(i);
    const Zr2* y = w.root(j);
    for (std::size_t c = 0; c < width; ++c) {
      if (!(x[c] == y[c])) return false;
    }
    return true;
  };
  std::unordered_set<std::size_t, decltype(hash), decltype(equal)> seen(64, hash, equal);

  for (int s = 0; s < n; ++s) {
    if (w.size() >= max_roots) {
      w.truncated_ = true;
      return w;
    }
    w.coords_.resize(w.coords_.size() + width);
    w.coords_[w.size() * width + static_cast<std::size_t>(s)] = {1, 0};
    w.depths_.push_back(0);
    seen.insert(w.size() - 1);
  }
  try {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w.depths_[k] >= bound) continue;
      for (int s = 0; s < n; ++s) {
        // s . v changes only coordinate s: v_s -> -v_s + sum_t 2cos(pi/m_st) v_t.
        const Zr2* v = w.root(k);
        Zr2 c{-v[s].a, -v[s].b};
        for (int t = 0; t < n; ++t) {
          if (t != s) c = c + times(w.k_[static_cast<std::size_t>(s) * n + t], v[t]);
        }
        if (sign(c) < 0) continue;
        std::size_t next = w.size();
        w.coords_.insert(w.coords_.end(), w.coords_.begin() + static_cast<std::ptrdiff_t>(k * width),
                         w.coords_.begin() + static_cast<std::ptrdiff_t>((k + 1) * width));
        w.coords_[next * width + static_cast<std::size_t>(s)] = c;
        w.depths_.push_back(w.depths_[k] + 1);
        if (!seen.insert(next).second) {
          w.coords_.resize(next * width);
          w.depths_.pop_back();
          continue;
        }
        if (next >= max_roots) {
          seen.erase(next);
          w.coords_.resize(next * width);
          w.depths_.pop_back();
          w.truncated_ = true;
          return w;
        }
      }
    }
  } catch (const Overflow&) {
    return std::nullopt;
  }
  return w;
}

bool CompactWindow::orthogonal(std::size_t i, int s) const {
  const Zr2* v = root(i);
  Zr2 sum{twice(v[s].a), twice(v[s].b)};
  for (int t = 0; t < n_; ++t) {
    if (t == s) continue;
    Zr2 p = times(k_[static_cast<std::size_t>(s) * n_ + t], v[t]);
    sum = sum + Zr2{-p.a, -p.b};
  }
  return sum.a == 0 && sum.b == 0;
}

GeneratorSet CompactWindow::support(std::size_t i) const {
  GeneratorSet out;
  const Zr2* v = root(i);
  for (int t = 0; t < n_; ++t) {
    if (v[t].a != 0 || v[t].b != 0) out.insert(t);
  }
  return out;
}

Vector CompactWindow::to_vector(std::size_t i) const {
  Vector out(static_cast<std::size_t>(n_));
  const Zr2* v = root(i);
  for (int t = 0; t < n_; ++t) {
    FieldElem x(Rational(mpz_class(static_cast<long>(v[t].a))));
    if (v[t].b != 0) x += FieldElem(Rational(mpz_class(static_cast<long>(v[t].b)))) * FieldElem::sqrt_of(2);
    out[static_cast<std::size_t>(t)] = x;
  }
  return out;
}

namespace {

std::optional<std::vector<Zr2>> compact_labels(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<Zr2> k(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      Zr2& e = k[static_cast<std::size_t>(s) * n + t];
      switch (g.label(s, t)) {
        case 2: e = {0, 0}; break;
        case 3: e = {1, 0}; break;
        case 4: e = {0, 1}; break;
        case kInfinity: e = {2, 0}; break;
        default: return std::nullopt;
      }
    }
  }
  return k;
}

// <alpha_s, v> = 2 v_s - sum_t 2cos(pi/m_st) v_t.
Zr2 pairing(const Zr2* k, int n, const Zr2* v, int s) {
  Zr2 sum{twice(v[s].a), twice(v[s].b)};
  for (int t = 0; t < n; ++t) {
    if (t == s) continue;
    Zr2 p = times(k[static_cast<std::size_t>(s) * n + t], v[t]);
    sum = sum + Zr2{-p.a, -p.b};
  }
  return sum;
}

}  // namespace

std::optional<bool> visit_roots(const CoxeterGraph& g, int bound, std::size_t max_roots,
                                const std::function<void(const RootVisit&)>& visit) {
  const int n = g.size();
  auto k = compact_labels(g);
  if (!k) return std::nullopt;
  const std::size_t width = static_cast<std::size_t>(n);
  const std::size_t frames = static_cast<std::size_t>(bound + 1);
  // Frame d holds the current root of depth d, its pairings <alpha_t, root>
  // and the next generator to try.
  std::vector<Zr2> coords(width * frames);
  std::vector<Zr2> pairs(width * frames);
  std::vector<int> next(frames);
  std::size_t visited = 0;
  try {
    for (int s0 = 0; s0 < n; ++s0) {
      if (visited >= max_roots) return true;
      std::fill(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(width), Zr2{});
      coords[static_cast<std::size_t>(s0)] = {1, 0};
      for (int t = 0; t < n; ++t) pairs[static_cast<std::size_t>(t)] = pairing(k->data(), n, coords.data(), t);
      ++visited;
      visit({coords.data(), pairs.data(), 0});
      next[0] = 0;
      int d = 0;
      while (d >= 0) {
        const std::size_t f = static_cast<std::size_t>(d);
        if (d >= bound || next[f] >= n) {
          --d;
          continue;
        }
        const int s = next[f]++;
        const Zr2* p = pairs.data() + f * width;
        if (sign(p[s]) >= 0) continue;  // only ascents raise the depth
        // s . v = v - p_s alpha_s, so p_t -> p_t + p_s 2cos(pi/m_ts) and p_s -> -p_s.
        Zr2* cp = pairs.data() + (f + 1) * width;
        const Zr2 ps = p[s];
        bool canonical = true;
        for (int t = 0; t < n; ++t) {
          if (t == s) {
            cp[t] = {-ps.a, -ps.b};
            continue;
          }
          cp[t] = p[t] + times((*k)[static_cast<std::size_t>(t) * width + static_cast<std::size_t>(s)], ps);
          if (t < s && sign(cp[t]) > 0) {
            canonical = false;
            break;
          }
        }
        if (!canonical) continue;
        if (visited >= max_roots) return true;
        const Zr2* v = coords.data() + f * width;
        Zr2* child = coords.data() + (f + 1) * width;
        std::copy(v, v + width, child);
        child[s] = child[s] + Zr2{-ps.a, -ps.b};
        ++visited;
        visit({child, cp, d + 1});
        ++d;
        next[f + 1] = 0;
      }
    }
  } catch (const Overflow&) {
    return std::nullopt;
  }
  return false;
}

GeneratorSet support(int n, const Zr2* v) {
  GeneratorSet out;
  for (int t = 0; t < n; ++t) {
    if (v[t].a != 0 || v[t].b != 0) out.insert(t);
  }
  return out;
}

Vector to_vector(int n, const Zr2* v) {
  Vector out(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    FieldElem x(Rational(mpz_class(static_cast<long>(v[t].a))));
    if (v[t].b != 0) x += FieldElem(Rational(mpz_class(static_cast<long>(v[t].b)))) * FieldElem::sqrt_of(2);
    out[static_cast<std::size_t>(t)] = x;
  }
  return out;
}

}  // namespace coxeter::detail
