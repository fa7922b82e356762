#include "coxeter/field.hpp"

#include <cctype>
#include <cmath>

#include "coxeter/error.hpp"

namespace coxeter {
namespace {

// Each basis element sqrt(K) with K squarefree over {2,3,5} is identified by
// the bitmask of primes dividing K (bit 0 = 2, bit 1 = 3, bit 2 = 5).
constexpr std::array<int, 8> kMaskOfIndex = {0, 1, 2, 4, 3, 5, 6, 7};
constexpr std::array<int, 8> kIndexOfMask = {0, 1, 2, 4, 3, 5, 6, 7};

constexpr int prime_product(int mask) {
  return ((mask & 1) ? 2 : 1) * ((mask & 2) ? 3 : 1) * ((mask & 4) ? 5 : 1);
}

struct ProductTable {
  std::array<std::array<int, 8>, 8> index{};
  std::array<std::array<int, 8>, 8> factor{};
  constexpr ProductTable() {
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        int mi = kMaskOfIndex[i];
        int mj = kMaskOfIndex[j];
        index[i][j] = kIndexOfMask[mi ^ mj];
        factor[i][j] = prime_product(mi & mj);
      }
    }
  }
};

constexpr ProductTable kProduct{};

int radicand_index(int k) {
  for (int i = 0; i < FieldElem::kDim; ++i) {
    if (FieldElem::kRadicand[i] == k) return i;
  }
  return -1;
}

}  // namespace

FieldElem::FieldElem(long value) { c_[0] = value; }

FieldElem::FieldElem(const Rational& value) {
  c_[0] = value;
  c_[0].canonicalize();
}

FieldElem FieldElem::sqrt_of(int k) {
  int idx = radicand_index(k);
  if (idx < 0) throw Error("sqrt(" + std::to_string(k) + ") is not a basis element");
  return basis(idx);
}

FieldElem FieldElem::basis(int index) {
  FieldElem x;
  x.c_.at(static_cast<std::size_t>(index)) = 1;
  return x;
}

bool FieldElem::is_zero() const {
  for (const auto& q : c_) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

bool FieldElem::is_rational() const {
  for (int i = 1; i < kDim; ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

bool FieldElem::is_one() const { return is_rational() && c_[0] == 1; }

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& q : r.c_) mpq_neg(q.get_mpq_t(), q.get_mpq_t());
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
  for (int i = 0; i < kDim; ++i) {
    if (sgn(other.c_[i]) != 0) mpq_add(c_[i].get_mpq_t(), c_[i].get_mpq_t(), other.c_[i].get_mpq_t());
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) {
  for (int i = 0; i < kDim; ++i) {
    if (sgn(other.c_[i]) != 0) mpq_sub(c_[i].get_mpq_t(), c_[i].get_mpq_t(), other.c_[i].get_mpq_t());
  }
  return *this;
}

FieldElem& FieldElem::scale(const Rational& factor) {
  // mpq arithmetic assumes canonical operands; callers may pass Rational(n, d) as is.
  Rational f = factor;
  f.canonicalize();
  for (auto& q : c_) {
    if (sgn(q) != 0) mpq_mul(q.get_mpq_t(), q.get_mpq_t(), f.get_mpq_t());
  }
  return *this;
}

void FieldElem::add_product(const FieldElem& a, const FieldElem& b) {
  thread_local Rational tmp;
  for (int i = 0; i < kDim; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < kDim; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      int f = kProduct.factor[i][j];
      if (f != 1) {
        // Scaling the numerator alone can break lowest terms.
        mpz_mul_ui(mpq_numref(tmp.get_mpq_t()), mpq_numref(tmp.get_mpq_t()), static_cast<unsigned long>(f));
        mpq_canonicalize(tmp.get_mpq_t());
      }
      auto& dst = c_[kProduct.index[i][j]];
      mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

void FieldElem::sub_product(const FieldElem& a, const FieldElem& b) {
  thread_local Rational tmp;
  for (int i = 0; i < kDim; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < kDim; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      int f = kProduct.factor[i][j];
      if (f != 1) {
        mpz_mul_ui(mpq_numref(tmp.get_mpq_t()), mpq_numref(tmp.get_mpq_t()), static_cast<unsigned long>(f));
        mpq_canonicalize(tmp.get_mpq_t());
      }
      auto& dst = c_[kProduct.index[i][j]];
      mpq_sub(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem r;
  r.add_product(a, b);
  return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& other) {
  *this = *this * other;
  return *this;
}

FieldElem FieldElem::conjugate(int prime) const {
  int bit = prime == 2 ? 1 : prime == 3 ? 2 : prime == 5 ? 4 : 0;
  if (bit == 0) throw Error("conjugate: prime must be 2, 3 or 5");
  FieldElem r = *this;
  for (int i = 0; i < kDim; ++i) {
    if (kMaskOfIndex[i] & bit) mpq_neg(r.c_[i].get_mpq_t(), r.c_[i].get_mpq_t());
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    FieldElem r;
    mpq_inv(r.c_[0].get_mpq_t(), c_[0].get_mpq_t());
    return r;
  }
  // Peel off one quadratic extension at a time: x * conj2(x) lies in
  // Q(r3, r5), and so on down to Q.
  FieldElem c2 = conjugate(2);
  FieldElem y = *this * c2;
  FieldElem c3 = y.conjugate(3);
  FieldElem z = y * c3;
  FieldElem c5 = z.conjugate(5);
  FieldElem n = z * c5;
  if (!n.is_rational() || n.is_zero()) {
    throw InvariantViolation("field norm is not a nonzero rational");
  }
  Rational inv_norm;
  mpq_inv(inv_norm.get_mpq_t(), n.c_[0].get_mpq_t());
  FieldElem r = c2 * c3;
  r = r * c5;
  r.scale(inv_norm);
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  for (int i = 0; i < FieldElem::kDim; ++i) {
    if (!mpq_equal(a.c_[i].get_mpq_t(), b.c_[i].get_mpq_t())) return false;
  }
  return true;
}

Sign FieldElem::sign() const {
  int nonzero = 0;
  int pos = 0;
  for (const auto& q : c_) {
    int s = sgn(q);
    if (s != 0) {
      ++nonzero;
      if (s > 0) ++pos;
    }
  }
  if (nonzero == 0) return Sign::zero;
  if (pos == nonzero) return Sign::positive;
  if (pos == 0) return Sign::negative;

  // Mixed signs: clear denominators, then bracket sum a_i sqrt(K_i) * 2^P
  // with integer square roots floor(sqrt(K_i * 4^P)).
  mpz_class denom = 1;
  for (const auto& q : c_) {
    if (sgn(q) != 0) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
  }
  std::array<mpz_class, kDim> a;
  for (int i = 0; i < kDim; ++i) {
    a[i] = c_[i].get_num() * (denom / c_[i].get_den());
  }
  mpz_class neg_slack = 0;
  mpz_class pos_slack = 0;
  for (int i = 1; i < kDim; ++i) {
    if (a[i] < 0) neg_slack += a[i];
    if (a[i] > 0) pos_slack += a[i];
  }
  for (unsigned long bits = 32;; bits *= 2) {
    mpz_class center = a[0];
    center <<= bits;
    for (int i = 1; i < kDim; ++i) {
      if (a[i] == 0) continue;
      mpz_class scaled = kRadicand[i];
      scaled <<= 2 * bits;
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
      center += a[i] * root;
    }
    mpz_class lower = center + neg_slack;
    mpz_class upper = center + pos_slack;
    if (lower > 0) return Sign::positive;
    if (upper < 0) return Sign::negative;
    if (bits > (1UL << 20)) throw InvariantViolation("sign refinement did not converge");
  }
}

double FieldElem::approx() const {
  double r = 0.0;
  for (int i = 0; i < kDim; ++i) {
    if (sgn(c_[i]) != 0) r += c_[i].get_d() * std::sqrt(static_cast<double>(kRadicand[i]));
  }
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string FieldElem::to_string() const {
  std::string out;
  for (int i = 0; i < kDim; ++i) {
    int s = sgn(c_[i]);
    if (s == 0) continue;
    Rational mag = abs(c_[i]);
    std::string term;
    if (i == 0) {
      term = coxeter::to_string(mag);
    } else {
      std::string radical = "r" + std::to_string(kRadicand[i]);
      term = mag == 1 ? radical : coxeter::to_string(mag) + "*" + radical;
    }
    if (out.empty()) {
      out = (s < 0 ? "-" : "") + term;
    } else {
      out += (s < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

FieldElem FieldElem::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error("empty field element");
  FieldElem result;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error("malformed field element '" + std::string(text) + "': " + why);
  };
  auto read_digits = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num = read_digits();
      std::string den = "1";
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_digits();
      }
      mpz_class d(den);
      if (d == 0) fail("zero denominator");
      coeff = Rational(mpz_class(num), d);
      coeff.canonicalize();
      have_coeff = true;
    }
    int index = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'r')) {
      if (s[pos] == '*') {
        if (!have_coeff) fail("dangling '*'");
        ++pos;
      }
      if (pos >= s.size() || s[pos] != 'r') fail("expected radical rK");
      ++pos;
      index = radicand_index(std::stoi(read_digits()));
      if (index < 0) fail("unsupported radical");
    } else if (!have_coeff) {
      fail("expected a term");
    }
    if (sign < 0) coeff = -coeff;
    result.c_[index] += coeff;
  }
  return result;
}

std::size_t FieldElem::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& q : c_) {
    std::size_t v = 0;
    if (sgn(q) != 0) {
      v = mpz_getlimbn(q.get_num_mpz_t(), 0) * 31 + mpz_getlimbn(q.get_den_mpz_t(), 0);
      v ^= static_cast<std::size_t>(sgn(q) + 2) << 7;
    }
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const FieldElem& a, const FieldElem& b) {
  for (int i = 0; i < FieldElem::kDim; ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

FieldElem cos_pi_over(int m) {
  switch (m) {
    case 2:
      return FieldElem(0);
    case 3:
      return FieldElem(Rational(1, 2));
    case 4: {
      FieldElem r = FieldElem::sqrt_of(2);
      return r.scale(Rational(1, 2));
    }
    case 5: {
      FieldElem r = FieldElem(1) + FieldElem::sqrt_of(5);
      return r.scale(Rational(1, 4));
    }
    case 6: {
      FieldElem r = FieldElem::sqrt_of(3);
      return r.scale(Rational(1, 2));
    }
    default:
      throw UnsupportedLabel(m);
  }
}

}  // namespace coxeter
