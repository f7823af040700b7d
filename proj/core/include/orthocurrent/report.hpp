#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "orthocurrent/oracle.hpp"
#include "orthocurrent/structure.hpp"

namespace orthocurrent {

using json = nlohmann::json;

// Element literals, vectors, subspaces and structure-constant tensors
// serialize as (nested) arrays of canonical element literals.
json to_json(const Vector& v);
json to_json(const Subspace& s);
json to_json(const StructureConstants& c);
Vector vector_from_json(const json& j, const Field& field);
Subspace subspace_from_json(const json& j, const Field& field, std::size_t ambient_dim);
StructureConstants constants_from_json(const json& j, const Field& field);
json to_json(const std::vector<Check>& checks);

/// One line of the printed multiplication table, e.g. "[h2,h3] = D c f1".
struct TableLine {
  std::size_t left;
  std::size_t right;
  std::size_t target;
  std::string symbol;     // "b", "-b", "D b", ...
  FieldElement expected;  // symbol evaluated at (a, b, c, d)
  Vector computed;        // bracket read from the computed table
  bool ok;
  std::string render() const;
};

/// The twelve nonzero brackets among f1..h3 for diag(a, b, c, d), checked
/// against a computed table on that basis.
std::vector<TableLine> table_lines(const StructureConstants& table, const DiagonalEntries& entries);

// Reports follow one schema:
//   {"case", "field", "form", "D", "witnesses": {...}, "checks": [{"name", "ok"}]}
json to_json(const TheoremReport& r);
json to_json(const DecompositionCertificate& c);
json to_json(const CounterexampleReport& r);
json table_json(const Field& field, const DiagonalEntries& entries, const std::vector<TableLine>& lines);
json oracle_json(const Field& field, const DiagonalEntries& entries, const std::vector<Subspace>& ideals,
                 const std::vector<Check>& checks);

DecompositionCertificate certificate_from_json(const json& j);

/// Parses an emitted report and re-runs its checks from the embedded data.
std::vector<Check> recheck_json(const json& j);

std::string render_text(const TheoremReport& r);
std::string render_text(const DecompositionCertificate& c);
std::string render_text(const CounterexampleReport& r);

/// Cross-validation of a certificate against the enumerated ideal lattice.
std::vector<Check> oracle_checks(const DecompositionCertificate& cert, const std::vector<Subspace>& ideals);

}  // namespace orthocurrent
