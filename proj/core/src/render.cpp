#include "coxeter/render.hpp"

#include <algorithm>
#include <sstream>

#include "coxeter/error.hpp"

namespace coxeter {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "tsv") return Format::tsv;
  if (name == "dot") return Format::dot;
  throw PreconditionError("unknown format '" + std::string(name) + "' (expected text, tsv or dot)");
}

std::string format_golden(const FieldElem& x) {
  for (int i = 1; i < FieldElem::kDim; ++i) {
    if (i != 3 && sgn(x.coord(i)) != 0) return "";
  }
  // p + q r5 = (p - q) + 2q c
  Rational b = 2 * x.coord(3);
  Rational a = x.coord(0) - x.coord(3);
  if (sgn(b) == 0) return to_string(a);
  std::string s;
  if (b == 1) {
    s = "c";
  } else if (b == -1) {
    s = "-c";
  } else {
    s = to_string(b) + "c";
  }
  if (sgn(a) > 0) s += "+" + to_string(a);
  if (sgn(a) < 0) s += "-" + to_string(Rational(-a));
  return s;
}

namespace {

bool needs_golden(const RootTable& table) {
  for (const auto& r : table.roots) {
    for (const auto& x : r.coords()) {
      if (sgn(x.coord(3)) != 0) return !format_golden(x).empty();
    }
  }
  return false;
}

std::string action_cell(int a) {
  if (a == RootTable::kFixed) return ".";
  if (a == RootTable::kSimple) return "---";
  return std::to_string(a + 1);
}

// Coordinates restricted to the generators of the table.
std::string table_coords(const RootTable& table, const Root& r, bool golden) {
  std::string s = "[";
  bool first = true;
  for (int j : table.generators) {
    if (!first) s += ',';
    first = false;
    s += golden ? format_golden(r[j]) : r[j].to_string();
  }
  return s + "]";
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_root_table(const RootTable& table, Format format) {
  std::ostringstream out;
  const std::vector<int> gens = table.generators.to_vector();
  if (format == Format::tsv) {
    out << "index\theight\tcoeffs\tactions\n";
    for (std::size_t i = 0; i < table.roots.size(); ++i) {
      out << i + 1 << '\t' << table.heights[i] << '\t' << table_coords(table, table.roots[i], false) << '\t';
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) out << ',';
        out << action_cell(table.actions[i][k]);
      }
      out << '\n';
    }
    return out.str();
  }
  if (format == Format::dot) throw PreconditionError("root tables have no dot rendering");
  const bool golden = needs_golden(table);
  std::vector<std::string> coords;
  std::size_t width = 4;
  for (const auto& r : table.roots) {
    coords.push_back(table_coords(table, r, golden));
    width = std::max(width, coords.back().size());
  }
  if (golden) out << "# c = 2cos(pi/5) = 1/2 + 1/2*r5\n";
  out << pad("height", 7) << pad("i", 5) << pad("root", width + 2);
  for (std::size_t k = 0; k < gens.size(); ++k) out << pad("r" + std::to_string(k + 1), 5);
  out << '\n';
  for (std::size_t i = 0; i < table.roots.size(); ++i) {
    bool first_of_height = i == 0 || table.heights[i] != table.heights[i - 1];
    std::string line = pad(first_of_height ? std::to_string(table.heights[i]) : "", 7) +
                       pad(std::to_string(i + 1), 5) + pad(coords[i], width + 2);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int a = table.actions[i][k];
      line += pad(a == RootTable::kFixed ? "" : action_cell(a), 5);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_coxeter_matrix(const CoxeterGraph& g) {
  std::ostringstream out;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (j) out << ' ';
      int m = g.label(i, j);
      out << (m == kInfinity ? std::string("inf") : std::to_string(m));
    }
    out << '\n';
  }
  return out.str();
}

const char* outcome_name(const CentralizerReport& report) {
  switch (report.outcome()) {
    case Outcome::verified:
      return "VERIFIED";
    case Outcome::refuted:
      return report.hypothesis ? "REFUTED" : "REFUTED-HYPOTHESIS-FALSE";
    case Outcome::incomplete:
      return "INCOMPLETE";
  }
  return "?";
}

std::string render_report(const Representation& rep, const CentralizerReport& r) {
  std::ostringstream out;
  const Groupoid& g = r.groupoid;
  out << "I = " << to_string(r.subset) << "  A>1-free: " << (r.hypothesis ? "yes" : "no") << '\n';
  if (g.truncated) out << "groupoid truncated: " << g.truncation_reason << '\n';

  out << "\nNODES " << g.nodes.size() << '\n';
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out << "  " << v + 1 << "  " << to_string(g.nodes[v]) << "  set " << to_string(g.nodes[v].set());
    if (g.tree_edge[v] >= 0) out << "  parent " << g.edges[g.tree_edge[v]].source + 1;
    out << '\n';
    for (const auto& p : g.perp_roots) {
      if (p.node == static_cast<int>(v)) out << "      gamma(y,s" << p.t + 1 << ") = " << format_root(p.gamma) << '\n';
    }
  }

  out << "\nEDGES " << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    out << "  " << e.source + 1 << " -s" << e.t + 1 << "-> " << e.target + 1 << "  K " << to_string(e.k)
        << (e.in_tree ? "  tree" : "") << '\n';
  }

  out << "\nPERP-ROOTS " << r.perp.roots.size() << (r.perp.complete ? " complete" : " incomplete") << '\n';
  for (std::size_t i = 0; i < r.perp.roots.size(); ++i) {
    out << "  " << i + 1 << "  " << format_root(r.perp.roots[i]) << '\n';
  }

  out << "\nCOXETER-MATRIX\n";
  if (r.finite) {
    std::istringstream rows(render_coxeter_matrix(r.finite->matrix));
    for (std::string line; std::getline(rows, line);) out << "  " << line << '\n';
  } else {
    out << "  unavailable: " << r.finite_part_error << '\n';
  }

  out << "\nFINITE-PART\n";
  if (r.finite) {
    for (std::size_t c = 0; c < r.finite->components.size(); ++c) {
      out << "  roots " << to_string(r.finite->components[c]) << "  "
          << (r.finite->types[c] ? r.finite->types[c]->name() : std::string("infinite")) << '\n';
    }
  }

  out << "\nY-GENERATORS " << r.generators.size() << '\n';
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    const auto& e = g.edges[r.generators[i].edge];
    Word w = reduced_word(rep, r.generators[i].element);
    out << "  " << i + 1 << "  via " << e.source + 1 << " -s" << e.t + 1 << "-> " << e.target + 1 << "  length "
        << w.size() << "  " << format_word(w) << '\n';
  }

  out << "\nVERDICTS\n";
  std::size_t moved = 0;
  for (const auto& v : r.verdicts) {
    if (v.fixed) continue;
    ++moved;
    out << "  generator " << v.generator + 1 << " moves " << format_root(r.perp.roots[v.root]) << " to "
        << format_root(v.image) << '\n';
  }
  out << "  pairs checked " << r.verdicts.size() << ", moved " << moved << '\n';
  out << "  hypothesis " << (r.hypothesis ? "holds" : "fails") << ", conclusion "
      << (r.conclusion ? "holds" : "fails") << " on the computed generators\n";
  if (!r.complete()) out << "  results cover a truncated search only\n";
  out << "  " << outcome_name(r) << '\n';
  return out.str();
}

std::string render_groupoid_dot(const Groupoid& g) {
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out << "  n" << v + 1 << " [label=\"" << to_string(g.nodes[v]) << "\"";
    if (v == 0) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << e.source + 1 << " -> n" << e.target + 1 << " [label=\"" << e.t + 1 << "\"";
    if (!e.in_tree) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_decomposition(const Decomposition& d, Format format) {
  std::ostringstream out;
  const char sep = format == Format::tsv ? '\t' : ' ';
  if (format == Format::tsv) out << "index\tkind\tt\tK\tlength\tword\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Factor& f = d.factors[i];
    out << i << sep << (f.kind == FactorKind::wide ? 'W' : 'N') << sep << f.t + 1 << sep << to_string(f.k) << sep
        << f.word.size() << sep << format_word(f.word) << '\n';
  }
  return out.str();
}

}  // namespace coxeter
