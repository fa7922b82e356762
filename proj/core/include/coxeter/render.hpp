#pragma once

#include <string>

#include "coxeter/centralizer.hpp"
#include "coxeter/decomp.hpp"
#include "coxeter/roots.hpp"

namespace coxeter {

enum class Format { text, tsv, dot };

/// Parses "text", "tsv" or "dot"; throws PreconditionError otherwise.
Format parse_format(std::string_view name);

/// Positive-root table. TSV has one header line and the columns
/// index, height, coeffs, actions; actions lists one cell per generator of
/// the table, "." when the generator fixes the root and "---" when the root
/// is that generator's simple root. The text layout follows the same
/// columns, aligned, and writes elements of Q(r5) in terms of
/// c = 2cos(pi/5) when the table needs r5.
std::string render_root_table(const RootTable& table, Format format);

/// c-notation for x in Q(r5): "2c+1", "c", "3". Empty when x needs another
/// radical.
std::string format_golden(const FieldElem& x);

std::string render_coxeter_matrix(const CoxeterGraph& g);

std::string render_report(const Representation& rep, const CentralizerReport& report);
std::string render_groupoid_dot(const Groupoid& g);

/// One line per factor: index, kind (W/N), t, K, length, reduced word.
std::string render_decomposition(const Decomposition& d, Format format);

const char* outcome_name(const CentralizerReport& report);

}  // namespace coxeter
