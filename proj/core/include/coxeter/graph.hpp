#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxeter {

/// Label value used for m(s,t) = infinity.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// A subset of the generators, as a bitmask over 0-based indices.
/// Graphs are limited to 64 generators.
class GeneratorSet {
 public:
  static constexpr int kMaxGenerators = 64;

  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<int> indices);
  static GeneratorSet from(const std::vector<int>& indices);
  static GeneratorSet all(int n) {
    return GeneratorSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static GeneratorSet single(int i) { return GeneratorSet(std::uint64_t{1} << i); }

  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1U; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int first() const { return empty() ? -1 : std::countr_zero(bits_); }
  void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  bool subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> to_vector() const;

  friend GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ | b.bits_); }
  friend GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & b.bits_); }
  friend GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & ~b.bits_); }
  friend bool operator==(GeneratorSet a, GeneratorSet b) = default;
  friend auto operator<=>(GeneratorSet a, GeneratorSet b) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& other) const = default;

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,3,4}" with 1-based indices.
std::string to_string(GeneratorSet set);

/// Symmetric Coxeter matrix on n generators. Labels are 1 on the diagonal
/// and in {2,...,6} or kInfinity off it; pairs never set default to 2.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(int n);

  int size() const { return n_; }
  int label(int i, int j) const { return labels_[index(i, j)]; }
  /// Sets m(i,j) = m(j,i); throws UnsupportedLabel / PreconditionError.
  void set_label(int i, int j, int m);
  bool joined(int i, int j) const { return i != j && label(i, j) >= 3; }
  std::vector<int> neighbours(int i) const;

  /// The same graph restricted to `subset`, relabelled 0..|subset|-1 in
  /// increasing index order.
  CoxeterGraph induced(GeneratorSet subset) const;

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<int> labels_;
};

/// Parses the line-based graph format:
///   nodes <n>
///   edge <i> <j> <m>      (1-based, m in 3..6 or "inf")
/// '#' starts a comment. Throws ParseError / UnsupportedLabel.
CoxeterGraph parse_graph(std::string_view text);
CoxeterGraph load_graph(const std::string& path);
/// Serialises into the format accepted by parse_graph.
std::string format_graph(const CoxeterGraph& g);

/// Parses "1,3,4" (1-based) into a set; validates against n.
GeneratorSet parse_subset(std::string_view text, int n);
/// Parses "4,5" into an ordered 0-based list.
std::vector<int> parse_index_list(std::string_view text, int n);

/// Connected components of the subgraph induced by `subset`, ordered by
/// their least element.
std::vector<GeneratorSet> components(const CoxeterGraph& g, GeneratorSet subset);

bool is_adjacent(const CoxeterGraph& g, GeneratorSet a, GeneratorSet b);
bool is_apart(const CoxeterGraph& g, GeneratorSet a, GeneratorSet b);

/// Elements of J u K lying in a component of the graph on J u K that meets K.
GeneratorSet tilde_closure(const CoxeterGraph& g, GeneratorSet j, GeneratorSet k);

enum class Family { A, B, D, E, F, H, I2 };

struct FiniteType {
  Family family = Family::A;
  int rank = 0;
  /// m for the I2 family, 0 otherwise.
  int dihedral_label = 0;
  /// labelling[k] is the generator playing the role of r_{k+1}.
  std::vector<int> labelling;

  std::string name() const;
  friend bool operator==(const FiniteType& a, const FiniteType& b) {
    return a.family == b.family && a.rank == b.rank && a.dihedral_label == b.dihedral_label;
  }
};

/// Finite type and standard labelling of a connected, nonempty subset, or
/// nullopt when W_J is infinite. Throws PreconditionError if J is empty or
/// disconnected.
std::optional<FiniteType> classify(const CoxeterGraph& g, GeneratorSet j);

bool is_finite_type(const CoxeterGraph& g, GeneratorSet j);

/// False exactly for A_n (n >= 2), D_odd, E6 and I2(odd m). Throws
/// NotFiniteType if J does not classify.
bool is_minus_one_type(const CoxeterGraph& g, GeneratorSet j);

/// No component of I is of type A_n with n >= 2.
bool is_a_gt1_free(const CoxeterGraph& g, GeneratorSet i);

/// Parses "A5", "B3", "D7", "E8", "F4", "H3", "I2(5)" (also "I2_5").
FiniteType parse_type_name(std::string_view name);

/// The Coxeter graph of a finite type with nodes in standard labelling
/// order: node k is r_{k+1}.
CoxeterGraph make_graph(const FiniteType& type);
CoxeterGraph make_graph(std::string_view type_name);

}  // namespace coxeter
