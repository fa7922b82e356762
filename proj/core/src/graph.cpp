#include "coxeter/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "coxeter/error.hpp"

namespace coxeter {

GeneratorSet::GeneratorSet(std::initializer_list<int> indices) {
  for (int i : indices) insert(i);
}

GeneratorSet GeneratorSet::from(const std::vector<int>& indices) {
  GeneratorSet s;
  for (int i : indices) s.insert(i);
  return s;
}

std::vector<int> GeneratorSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i : *this) out.push_back(i);
  return out;
}

std::string to_string(GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  for (int i : set) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

CoxeterGraph::CoxeterGraph(int n) : n_(n) {
  if (n < 0 || n > GeneratorSet::kMaxGenerators) {
    throw PreconditionError("graph size must be in 0.." + std::to_string(GeneratorSet::kMaxGenerators));
  }
  labels_.assign(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) labels_[index(i, i)] = 1;
}

void CoxeterGraph::set_label(int i, int j, int m) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
    throw PreconditionError("set_label: bad generator pair");
  }
  if (m != kInfinity && (m < 2 || m > 6)) throw UnsupportedLabel(m);
  labels_[index(i, j)] = m;
  labels_[index(j, i)] = m;
}

std::vector<int> CoxeterGraph::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (joined(i, j)) out.push_back(j);
  }
  return out;
}

CoxeterGraph CoxeterGraph::induced(GeneratorSet subset) const {
  std::vector<int> nodes = subset.to_vector();
  CoxeterGraph h(static_cast<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      int m = label(nodes[a], nodes[b]);
      if (m != 2) h.set_label(static_cast<int>(a), static_cast<int>(b), m);
    }
  }
  return h;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool parse_int(const std::string& s, int& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

CoxeterGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<CoxeterGraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "nodes") {
      int n = 0;
      if (g) throw ParseError(line_no, "duplicate 'nodes' line");
      if (words.size() != 2 || !parse_int(words[1], n) || n < 1) {
        throw ParseError(line_no, "expected 'nodes <n>' with n >= 1");
      }
      if (n > GeneratorSet::kMaxGenerators) throw ParseError(line_no, "too many nodes");
      g.emplace(n);
    } else if (words[0] == "edge") {
      if (!g) throw ParseError(line_no, "'edge' before 'nodes'");
      int i = 0;
      int j = 0;
      if (words.size() != 4 || !parse_int(words[1], i) || !parse_int(words[2], j)) {
        throw ParseError(line_no, "expected 'edge <i> <j> <m>'");
      }
      if (i < 1 || j < 1 || i > g->size() || j > g->size()) {
        throw ParseError(line_no, "node index out of range");
      }
      if (i == j) throw ParseError(line_no, "edge joins a node to itself");
      int m = 0;
      if (words[3] == "inf") {
        m = kInfinity;
      } else if (!parse_int(words[3], m)) {
        throw ParseError(line_no, "label must be an integer or 'inf'");
      } else if (m < 3 || m > 6) {
        throw UnsupportedLabel(m);
      }
      int old = g->label(i - 1, j - 1);
      if (old != 2 && old != m) throw ParseError(line_no, "conflicting duplicate edge");
      g->set_label(i - 1, j - 1, m);
    } else {
      throw ParseError(line_no, "unknown directive '" + words[0] + "'");
    }
  }
  if (!g) throw ParseError(line_no, "missing 'nodes' line");
  return *g;
}

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const CoxeterGraph& g) {
  std::ostringstream out;
  out << "nodes " << g.size() << "\n";
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      int m = g.label(i, j);
      if (m == 2) continue;
      out << "edge " << i + 1 << " " << j + 1 << " ";
      if (m == kInfinity) {
        out << "inf";
      } else {
        out << m;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::vector<int> parse_index_list(std::string_view text, int n) {
  std::vector<int> out;
  std::string item;
  std::string s(text);
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    int v = 0;
    if (!parse_int(item, v)) throw ParseError(1, "bad index '" + item + "'");
    if (v < 1 || v > n) throw ParseError(1, "index " + item + " out of range 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  return out;
}

GeneratorSet parse_subset(std::string_view text, int n) {
  return GeneratorSet::from(parse_index_list(text, n));
}

std::vector<GeneratorSet> components(const CoxeterGraph& g, GeneratorSet subset) {
  std::vector<GeneratorSet> out;
  GeneratorSet rest = subset;
  while (!rest.empty()) {
    GeneratorSet comp = GeneratorSet::single(rest.first());
    GeneratorSet frontier = comp;
    while (!frontier.empty()) {
      GeneratorSet next;
      for (int v : frontier) {
        for (int u : rest) {
          if (!comp.contains(u) && g.joined(u, v)) next.insert(u);
        }
      }
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

bool is_adjacent(const CoxeterGraph& g, GeneratorSet a, GeneratorSet b) {
  for (int i : a) {
    for (int j : b) {
      if (g.joined(i, j)) return true;
    }
  }
  return false;
}

bool is_apart(const CoxeterGraph& g, GeneratorSet a, GeneratorSet b) {
  return (a & b).empty() && !is_adjacent(g, a, b);
}

GeneratorSet tilde_closure(const CoxeterGraph& g, GeneratorSet j, GeneratorSet k) {
  GeneratorSet out;
  for (GeneratorSet comp : components(g, j | k)) {
    if (!(comp & k).empty()) out = out | comp;
  }
  return out;
}

std::string FiniteType::name() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(rank);
    case Family::B:
      return "B" + std::to_string(rank);
    case Family::D:
      return "D" + std::to_string(rank);
    case Family::E:
      return "E" + std::to_string(rank);
    case Family::F:
      return "F4";
    case Family::H:
      return "H" + std::to_string(rank);
    case Family::I2:
      return "I2(" + std::to_string(dihedral_label) + ")";
  }
  return "?";
}

namespace {

// Walks from `start` away from `from` until a leaf, returning the visited
// nodes in order.
std::vector<int> walk_arm(const CoxeterGraph& g, GeneratorSet j, int from, int start) {
  std::vector<int> arm{start};
  int prev = from;
  int cur = start;
  for (;;) {
    int next = -1;
    for (int v : j) {
      if (v != prev && g.joined(cur, v)) next = v;
    }
    if (next < 0) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

std::optional<FiniteType> classify_branched(const CoxeterGraph& g, GeneratorSet j, int branch) {
  std::vector<std::vector<int>> arms;
  for (int v : j) {
    if (g.joined(branch, v)) arms.push_back(walk_arm(g, j, branch, v));
  }
  // Shorter arms first; ties go to the arm whose leaf has the lower index so
  // that symmetric cases label deterministically.
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.back() < b.back();
  });
  std::size_t a = arms[0].size();
  std::size_t b = arms[1].size();
  std::size_t c = arms[2].size();
  FiniteType t;
  int rank = j.size();
  if (a == 1 && b == 1) {
    t.family = Family::D;
    t.rank = rank;
    std::vector<int> long_arm = arms[2];
    std::vector<int> short1 = arms[0];
    std::vector<int> short2 = arms[1];
    if (c == 1) {
      // D4: the lowest leaf is r1, the remaining two follow in index order.
      std::vector<int> leaves = {arms[0][0], arms[1][0], arms[2][0]};
      std::sort(leaves.begin(), leaves.end());
      long_arm = {leaves[0]};
      short1 = {leaves[1]};
      short2 = {leaves[2]};
    }
    t.labelling.assign(long_arm.rbegin(), long_arm.rend());
    t.labelling.push_back(branch);
    t.labelling.push_back(short1[0]);
    t.labelling.push_back(short2[0]);
    return t;
  }
  if (a == 1 && b == 2 && c >= 2 && c <= 4) {
    t.family = Family::E;
    t.rank = rank;
    // For E6 the two arms of length 2 are ordered by leaf index, so r1 is
    // the lower of the two leaves.
    const std::vector<int>& pair_arm = arms[1];
    const std::vector<int>& long_arm = arms[2];
    t.labelling = {pair_arm[1], arms[0][0], pair_arm[0], branch};
    t.labelling.insert(t.labelling.end(), long_arm.begin(), long_arm.end());
    return t;
  }
  return std::nullopt;
}

std::optional<FiniteType> classify_path(const CoxeterGraph& g, GeneratorSet j) {
  int rank = j.size();
  int end = -1;
  for (int v : j) {
    int deg = 0;
    for (int u : j) deg += g.joined(u, v) ? 1 : 0;
    if (deg <= 1) {
      end = v;
      break;
    }
  }
  std::vector<int> path = walk_arm(g, j, -1, end);
  if (path.back() < path.front()) std::reverse(path.begin(), path.end());

  std::vector<int> heavy;  // positions p with label(path[p], path[p+1]) >= 4
  for (int p = 0; p + 1 < rank; ++p) {
    if (g.label(path[p], path[p + 1]) >= 4) heavy.push_back(p);
  }
  FiniteType t;
  t.rank = rank;
  if (heavy.empty()) {
    t.family = Family::A;
    t.labelling = path;
    return t;
  }
  if (heavy.size() > 1) return std::nullopt;
  int p = heavy[0];
  int m = g.label(path[p], path[p + 1]);
  if (rank == 2) {
    t.family = Family::I2;
    t.dihedral_label = m;
    t.labelling = path;
    return t;
  }
  bool at_start = p == 0;
  bool at_end = p == rank - 2;
  if (m == 4) {
    if (at_start || at_end) {
      t.family = Family::B;
      if (at_start) std::reverse(path.begin(), path.end());
      t.labelling = path;
      return t;
    }
    if (rank == 4 && p == 1) {
      t.family = Family::F;
      t.labelling = path;
      return t;
    }
    return std::nullopt;
  }
  if (m == 5 && (rank == 3 || rank == 4) && (at_start || at_end)) {
    t.family = Family::H;
    if (at_end) std::reverse(path.begin(), path.end());
    t.labelling = path;
    return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FiniteType> classify(const CoxeterGraph& g, GeneratorSet j) {
  if (j.empty()) throw PreconditionError("classify: empty subset");
  if (components(g, j).size() != 1) {
    throw PreconditionError("classify: subset " + to_string(j) + " is not connected");
  }
  int rank = j.size();
  if (rank == 1) {
    FiniteType t;
    t.family = Family::A;
    t.rank = 1;
    t.labelling = {j.first()};
    return t;
  }
  int edges = 0;
  int branch = -1;
  for (int v : j) {
    int deg = 0;
    for (int u : j) {
      if (u == v) continue;
      int m = g.label(u, v);
      if (m == kInfinity) return std::nullopt;
      if (m >= 3) ++deg;
    }
    edges += deg;
    if (deg > 3) return std::nullopt;
    if (deg == 3) {
      if (branch >= 0) return std::nullopt;
      branch = v;
    }
  }
  edges /= 2;
  if (edges != rank - 1) return std::nullopt;  // contains a cycle
  if (branch >= 0) {
    for (int u : j) {
      for (int v : j) {
        if (u < v && g.label(u, v) >= 4) return std::nullopt;
      }
    }
    return classify_branched(g, j, branch);
  }
  return classify_path(g, j);
}

bool is_finite_type(const CoxeterGraph& g, GeneratorSet j) {
  for (GeneratorSet comp : components(g, j)) {
    if (!classify(g, comp)) return false;
  }
  return true;
}

bool is_minus_one_type(const CoxeterGraph& g, GeneratorSet j) {
  auto t = classify(g, j);
  if (!t) throw NotFiniteType("subset " + to_string(j) + " is not of finite type");
  switch (t->family) {
    case Family::A:
      return t->rank == 1;
    case Family::D:
      return t->rank % 2 == 0;
    case Family::E:
      return t->rank != 6;
    case Family::I2:
      return t->dihedral_label % 2 == 0;
    default:
      return true;
  }
}

bool is_a_gt1_free(const CoxeterGraph& g, GeneratorSet i) {
  for (GeneratorSet comp : components(g, i)) {
    auto t = classify(g, comp);
    if (t && t->family == Family::A && t->rank >= 2) return false;
  }
  return true;
}

FiniteType parse_type_name(std::string_view name) {
  std::string s(name);
  auto bad = [&]() -> FiniteType { throw Error("unknown Coxeter type '" + s + "'"); };
  if (s.size() < 2) return bad();
  FiniteType t;
  if (s.rfind("I2", 0) == 0) {
    std::string rest = s.substr(2);
    if (!rest.empty() && (rest.front() == '(' || rest.front() == '_')) rest.erase(0, 1);
    if (!rest.empty() && rest.back() == ')') rest.pop_back();
    int m = 0;
    if (!parse_int(rest, m) || m < 3 || m > 6) return bad();
    t.family = Family::I2;
    t.rank = 2;
    t.dihedral_label = m;
    return t;
  }
  int rank = 0;
  if (!parse_int(s.substr(1), rank)) return bad();
  t.rank = rank;
  switch (s[0]) {
    case 'A':
      t.family = Family::A;
      if (rank < 1) return bad();
      break;
    case 'B':
      t.family = Family::B;
      if (rank < 2) return bad();
      break;
    case 'D':
      t.family = Family::D;
      if (rank < 4) return bad();
      break;
    case 'E':
      t.family = Family::E;
      if (rank < 6 || rank > 8) return bad();
      break;
    case 'F':
      t.family = Family::F;
      if (rank != 4) return bad();
      break;
    case 'H':
      t.family = Family::H;
      if (rank != 3 && rank != 4) return bad();
      break;
    default:
      return bad();
  }
  return t;
}

CoxeterGraph make_graph(const FiniteType& type) {
  int n = type.rank;
  CoxeterGraph g(n);
  auto join = [&](int a, int b, int m) { g.set_label(a - 1, b - 1, m); };
  switch (type.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) join(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) join(i, i + 1, 3);
      join(n - 1, n, 4);
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) join(i, i + 1, 3);
      join(n - 2, n, 3);
      break;
    case Family::E:
      join(1, 3, 3);
      join(2, 4, 3);
      for (int i = 3; i < n; ++i) join(i, i + 1, 3);
      break;
    case Family::F:
      join(1, 2, 3);
      join(2, 3, 4);
      join(3, 4, 3);
      break;
    case Family::H:
      join(1, 2, 5);
      for (int i = 2; i < n; ++i) join(i, i + 1, 3);
      break;
    case Family::I2:
      join(1, 2, type.dihedral_label);
      break;
  }
  return g;
}

CoxeterGraph make_graph(std::string_view type_name) { return make_graph(parse_type_name(type_name)); }

}  // namespace coxeter
