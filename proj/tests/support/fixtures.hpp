#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxeter/centralizer.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/roots.hpp"

namespace coxeter::testing {

inline std::string golden_path(const std::string& name) { return std::string(COXETER_GOLDEN_DIR) + "/" + name; }
inline std::string data_path(const std::string& name) { return std::string(COXETER_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

/// One row of a golden root table: index, height, coefficients, actions.
struct GoldenRow {
  int index = 0;
  int height = 0;
  Vector coeffs;
  std::vector<std::string> actions;
};

inline std::vector<GoldenRow> read_golden(const std::string& name, bool has_written_column) {
  std::vector<GoldenRow> rows;
  std::stringstream in(read_file(golden_path(name)));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    auto f = split(line, '\t');
    GoldenRow r;
    r.index = std::stoi(f[0]);
    r.height = std::stoi(f[1]);
    for (const auto& c : split(f[2].substr(1, f[2].size() - 2), ',')) r.coeffs.push_back(FieldElem::parse(c));
    r.actions = split(f[has_written_column ? 4 : 3], ',');
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Every element of a finite W, by breadth-first search on matrices.
inline std::vector<Element> brute_force_group(const Representation& rep) {
  std::vector<Element> out{Element::identity(rep.rank())};
  std::unordered_set<Element, ElementHash> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s = 0; s < rep.rank(); ++s) {
      Element w = out[i].times_simple(rep, s);
      if (seen.insert(w).second) out.push_back(w);
    }
  }
  return out;
}

inline CoxeterGraph counterexample_graph() {
  return parse_graph(
      "nodes 7\n"
      "edge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 5 7 3\n"
      "edge 3 6 inf\nedge 3 7 inf\n");
}

inline CoxeterGraph iota_example_graph() {
  return parse_graph(
      "nodes 8\n"
      "edge 1 2 3\nedge 2 3 3\nedge 3 4 3\nedge 5 6 3\nedge 6 7 3\nedge 7 8 3\n"
      "edge 1 5 3\nedge 4 8 3\nedge 1 6 3\nedge 4 7 3\n");
}

/// 1-based indices to a 0-based tuple / set / word.
inline Tuple tup(std::initializer_list<int> one_based) {
  std::vector<int> v;
  for (int i : one_based) v.push_back(i - 1);
  return Tuple(std::move(v));
}

inline GeneratorSet set1(std::initializer_list<int> one_based) {
  GeneratorSet s;
  for (int i : one_based) s.insert(i - 1);
  return s;
}

inline Word word1(std::initializer_list<int> one_based) {
  Word w;
  for (int i : one_based) w.push_back(i - 1);
  return w;
}

inline Vector vec(std::initializer_list<long> coords) {
  Vector v;
  for (long c : coords) v.emplace_back(c);
  return v;
}

/// The four factors of the D7 worked example, omega_0 first.
inline std::vector<Word> d7_example_factor_words() {
  return {word1({2, 3, 4, 5, 1, 2, 3, 4}), word1({3, 4, 5, 6}), word1({7, 5, 4, 6, 5, 7}), word1({6, 5, 4, 3})};
}

/// u = omega_3 omega_2 omega_1 omega_0 as a word.
inline Word d7_example_word() {
  auto f = d7_example_factor_words();
  Word w;
  for (int i = 3; i >= 0; --i) w.insert(w.end(), f[i].begin(), f[i].end());
  return w;
}

}  // namespace coxeter::testing
