#include "orthocurrent/report.hpp"

#include <map>
#include <sstream>

namespace orthocurrent {

json to_json(const Vector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

json to_json(const Subspace& s) {
  json j = json::array();
  for (const auto& v : s.basis_vectors()) j.push_back(to_json(v));
  return j;
}

json to_json(const StructureConstants& c) {
  json j = json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < c.dim(); ++k) row.push_back(to_json(c.bracket_of_basis(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

namespace {

FieldElement element_from_json(const json& j, const Field& field) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  throw Error(ErrorKind::Syntax, "expected an element literal, got " + j.dump());
}

json matrix_json(const Matrix& m) {
  json j = json::array();
  for (const auto& r : m.row_vectors()) j.push_back(to_json(r));
  return j;
}

json entries_json(const DiagonalEntries& e) {
  json j = json::array();
  for (const auto& x : e) j.push_back(x.to_string());
  return j;
}

DiagonalEntries entries_from_json(const json& j, const Field& field) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::Syntax, "form must list four diagonal entries");
  return {element_from_json(j[0], field), element_from_json(j[1], field), element_from_json(j[2], field),
          element_from_json(j[3], field)};
}

std::string wrap(const std::string& lit) {
  if (lit.find_first_of("+/*", 1) != std::string::npos || lit.find('-', 1) != std::string::npos) {
    return "(" + lit + ")";
  }
  return lit;
}

json report_skeleton(std::string_view kind, const Field& field, const json& form, const json& d) {
  return json{{"case", kind}, {"field", field.to_string()}, {"form", form}, {"D", d}, {"witnesses", json::object()},
              {"checks", json::array()}};
}

}  // namespace

Vector vector_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw Error(ErrorKind::Syntax, "expected an array of literals");
  Vector v;
  for (const auto& x : j) v.push_back(element_from_json(x, field));
  return v;
}

Subspace subspace_from_json(const json& j, const Field& field, std::size_t ambient_dim) {
  if (!j.is_array()) throw Error(ErrorKind::Syntax, "expected an array of basis rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, field));
  return canonicalize_subspace(field, rows, ambient_dim);
}

StructureConstants constants_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw Error(ErrorKind::Syntax, "expected a nested array of structure constants");
  const std::size_t n = j.size();
  StructureConstants c(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw Error(ErrorKind::ShapeMismatch, "structure constants are not cubic");
    for (std::size_t k = 0; k < n; ++k) {
      Vector v = vector_from_json(j[i][k], field);
      if (v.size() != n) throw Error(ErrorKind::ShapeMismatch, "structure constants are not cubic");
      for (std::size_t m = 0; m < n; ++m) c(i, k, m) = v[m];
    }
  }
  return c;
}

json to_json(const std::vector<Check>& checks) {
  json j = json::array();
  for (const auto& c : checks) j.push_back({{"name", c.name}, {"ok", c.ok}});
  return j;
}

// ---------------------------------------------------------------------------
// Multiplication table lines

namespace {

struct LineSpec {
  std::size_t left, right, target;
  int sign;
  bool times_d;
  std::size_t entry;  // 0 = a, 1 = b, 2 = c
};

constexpr LineSpec kLines[] = {
    {0, 1, 2, 1, false, 1},  {1, 2, 0, 1, false, 2},  {2, 0, 1, 1, false, 0},   // [f,f]
    {0, 4, 5, 1, false, 1},  {1, 5, 3, 1, false, 2},  {2, 3, 4, 1, false, 0},   // [f,h]
    {1, 3, 5, -1, false, 1}, {2, 4, 3, -1, false, 2}, {0, 5, 4, -1, false, 0},  // [f,h], negative
    {3, 4, 2, 1, true, 1},   {4, 5, 0, 1, true, 2},   {5, 3, 1, 1, true, 0},    // [h,h]
};

}  // namespace

std::vector<TableLine> table_lines(const StructureConstants& table, const DiagonalEntries& e) {
  if (table.dim() != 6) throw Error(ErrorKind::ShapeMismatch, "expected a 6-dimensional table");
  const FieldElement d = e[0] * e[1] * e[2] * e[3];
  std::vector<TableLine> out;
  for (const auto& s : kLines) {
    static constexpr const char* kEntryNames[] = {"a", "b", "c"};
    std::string symbol = std::string(s.sign < 0 ? "-" : "") + (s.times_d ? "D " : "") + kEntryNames[s.entry];
    FieldElement value = e[s.entry];
    if (s.times_d) value = d * value;
    if (s.sign < 0) value = -value;
    Vector computed = table.bracket_of_basis(s.left, s.right);
    Vector expected = zero_vector(table.field(), 6);
    expected[s.target] = value;
    const bool ok = computed == expected;
    out.push_back(TableLine{s.left, s.right, s.target, std::move(symbol), value, std::move(computed), ok});
  }
  return out;
}

std::string TableLine::render() const {
  const auto& names = ExplicitBasis::names;
  std::string t = names[target];
  std::string s = "[" + std::string(names[left]) + "," + names[right] + "] = " + symbol + " " + t + " = " +
                  wrap(expected.to_string()) + " " + t;
  if (!ok) s += "   MISMATCH: computed " + orthocurrent::to_string(computed);
  return s;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

json trial_json(const TheoremTrial& t) {
  json diag = json::array();
  for (const auto& x : t.orthogonal_diagonal) diag.push_back(x.to_string());
  return {{"W", to_json(t.w)},
          {"change", matrix_json(t.change)},
          {"orthogonal_diagonal", diag},
          {"change_det", t.change_det.to_string()},
          {"dim_LW", t.dim_lw},
          {"dim_LW_derived", t.dim_lw_derived},
          {"W_table", to_json(t.w_table)},
          {"M_table", to_json(t.m_table)},
          {"tensor_table", to_json(t.tensor_table)},
          {"equal", t.equal}};
}

std::vector<Check> theorem_checks(const TheoremReport& r) {
  return {{"explicit_basis_spans_M", r.basis_spans_m},
          {"tables_equal_standard_W", r.standard.equal},
          {"tables_equal_random_W", r.random_w.equal}};
}

}  // namespace

json to_json(const TheoremReport& r) {
  json j = report_skeleton("theorem", r.field, entries_json(r.entries), r.discriminant.to_string());
  j["seed"] = r.seed;
  j["equal"] = r.equal;
  j["witnesses"] = {{"dims", {{"L", r.dim_l}, {"M", r.dim_m}, {"LW", r.standard.dim_lw},
                              {"LW_derived", r.standard.dim_lw_derived}}},
                    {"standard", trial_json(r.standard)},
                    {"random_w", trial_json(r.random_w)},
                    {"attempts", r.attempts}};
  j["checks"] = to_json(theorem_checks(r));
  return j;
}

json to_json(const DecompositionCertificate& c) {
  json j = report_skeleton(case_name(c.which()), c.field, entries_json(c.form), c.discriminant.to_string());
  json w = {{"basis", "canonical basis of M = [L(f), L(f)]"}};
  if (const auto* t = std::get_if<TwoSimpleIdeals>(&c.evidence)) {
    w["I1"] = to_json(t->first);
    w["I2"] = to_json(t->second);
  } else if (const auto* s = std::get_if<SemidirectNR>(&c.evidence)) {
    w["N"] = to_json(s->n);
    w["R"] = to_json(s->r);
  } else {
    const auto& d = std::get<SimpleByDescent>(c.evidence);
    json steps = json::array();
    for (const auto& st : d.descent.steps) steps.push_back({{"rule", st.rule}, {"statement", st.statement}});
    json wit = json::array();
    for (const auto& v : d.descent.perfectness_witness) wit.push_back(to_json(v));
    w["K"] = d.descent.extension.to_string();
    w["embedding"] = d.descent.embedding;
    w["W_table"] = to_json(d.w_table);
    w["K_table"] = to_json(d.descent.table);
    w["perfectness_witness"] = wit;
    w["steps"] = steps;
  }
  j["witnesses"] = std::move(w);
  j["checks"] = to_json(c.checks);
  return j;
}

json to_json(const CounterexampleReport& r) {
  json j = report_skeleton("counterexample", r.base, json::array(), r.s.to_string());
  json steps = json::array();
  for (const auto& st : r.p_simple.steps) steps.push_back({{"rule", st.rule}, {"statement", st.statement}});
  j["p"] = r.p;
  j["radical_dim"] = r.radical.dim();
  j["witnesses"] = {{"s", r.s.to_string()},
                    {"extension", r.extension.to_string()},
                    {"embedding", r.p_simple.embedding},
                    {"L_dim", r.l_dim},
                    {"L_perfect", r.l_perfect},
                    {"P_dim_over_F", r.p_dim_over_base},
                    {"P_dim_over_K", r.p_dim_over_extension},
                    {"tensor_dim", r.tensor_dim},
                    {"radical", to_json(r.radical)},
                    {"quotient_dim", r.quotient_dim},
                    {"quotient_perfect", r.quotient_perfect},
                    {"P_simple_steps", steps}};
  j["checks"] = to_json(r.checks);
  return j;
}

json table_json(const Field& field, const DiagonalEntries& entries, const std::vector<TableLine>& lines) {
  const FieldElement d = entries[0] * entries[1] * entries[2] * entries[3];
  json j = report_skeleton("table", field, entries_json(entries), d.to_string());
  json rendered = json::array();
  std::vector<Check> checks;
  for (const auto& l : lines) {
    rendered.push_back(l.render());
    checks.push_back({"[" + std::string(ExplicitBasis::names[l.left]) + "," + ExplicitBasis::names[l.right] + "]", l.ok});
  }
  j["witnesses"] = {{"lines", rendered}};
  j["checks"] = to_json(checks);
  return j;
}

json oracle_json(const Field& field, const DiagonalEntries& entries, const std::vector<Subspace>& ideals,
                 const std::vector<Check>& checks) {
  const FieldElement d = entries[0] * entries[1] * entries[2] * entries[3];
  json j = report_skeleton("oracle", field, entries_json(entries), d.to_string());
  std::map<std::size_t, std::size_t> histogram;
  json list = json::array();
  for (const auto& s : ideals) {
    ++histogram[s.dim()];
    list.push_back(to_json(s));
  }
  json hist = json::object();
  for (const auto& [dim, count] : histogram) hist[std::to_string(dim)] = count;
  j["witnesses"] = {{"ideal_count", ideals.size()}, {"histogram", hist}, {"ideals", list}};
  j["checks"] = to_json(checks);
  return j;
}

DecompositionCertificate certificate_from_json(const json& j) {
  const Field field = Field::parse(j.at("field").get<std::string>());
  const DiagonalEntries form = entries_from_json(j.at("form"), field);
  const FieldElement d = element_from_json(j.at("D"), field);
  const std::string kind = j.at("case").get<std::string>();
  const json& w = j.at("witnesses");
  const std::size_t n = 6;
  DecompositionCertificate cert{field, form, d, TwoSimpleIdeals{Subspace(field, n), Subspace(field, n)}, {}};
  if (kind == case_name(CertificateCase::TwoSimpleIdeals)) {
    cert.evidence = TwoSimpleIdeals{subspace_from_json(w.at("I1"), field, n), subspace_from_json(w.at("I2"), field, n)};
  } else if (kind == case_name(CertificateCase::SemidirectNR)) {
    cert.evidence = SemidirectNR{subspace_from_json(w.at("N"), field, n), subspace_from_json(w.at("R"), field, n)};
  } else if (kind == case_name(CertificateCase::SimpleByDescent)) {
    const Field k = Field::parse(w.at("K").get<std::string>());
    std::vector<Vector> witness;
    for (const auto& v : w.at("perfectness_witness")) witness.push_back(vector_from_json(v, k));
    std::vector<InferenceStep> steps;
    for (const auto& s : w.at("steps")) steps.push_back({s.at("rule").get<std::string>(), s.at("statement").get<std::string>()});
    SimplicityCertificate descent{k,
                                  field,
                                  w.at("embedding").get<std::string>(),
                                  constants_from_json(w.at("K_table"), k),
                                  std::move(witness),
                                  std::move(steps)};
    cert.evidence = SimpleByDescent{constants_from_json(w.at("W_table"), field), std::move(descent)};
  } else {
    throw Error(ErrorKind::Syntax, "unknown certificate case '" + kind + "'");
  }
  for (const auto& c : j.at("checks")) cert.checks.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>()});
  return cert;
}

std::vector<Check> recheck_json(const json& j) {
  const std::string kind = j.at("case").get<std::string>();
  if (kind == "theorem") {
    const Field field = Field::parse(j.at("field").get<std::string>());
    const DiagonalEntries form = entries_from_json(j.at("form"), field);
    TheoremReport r = verify_theorem(field, form, j.at("seed").get<std::uint64_t>());
    const json& w = j.at("witnesses");
    std::vector<Check> out = theorem_checks(r);
    for (const char* trial : {"standard", "random_w"}) {
      const json& t = w.at(trial);
      StructureConstants m = constants_from_json(t.at("M_table"), field);
      StructureConstants cur = constants_from_json(t.at("tensor_table"), field);
      const TheoremTrial& fresh = std::string(trial) == "standard" ? r.standard : r.random_w;
      out.push_back({std::string("embedded_tables_equal_") + trial, tables_equal(m, cur)});
      out.push_back({std::string("embedded_table_reproduced_") + trial, m == fresh.m_table});
    }
    return out;
  }
  if (kind == "table") {
    const Field field = Field::parse(j.at("field").get<std::string>());
    const DiagonalEntries form = entries_from_json(j.at("form"), field);
    std::vector<Check> out;
    const auto lines = table_lines(explicit_table(build_orthogonal_algebra(field, form), form), form);
    const json& rendered = j.at("witnesses").at("lines");
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out.push_back({lines[i].render(), lines[i].ok && i < rendered.size() && rendered[i] == lines[i].render()});
    }
    return out;
  }
  if (kind == "counterexample") {
    CounterexampleReport r = counterexample_demo(j.at("p").get<unsigned>());
    std::vector<Check> out = r.checks;
    Subspace embedded = subspace_from_json(j.at("witnesses").at("radical"), r.extension, r.tensor_dim);
    out.push_back({"embedded_radical_reproduced", embedded == r.radical});
    return out;
  }
  if (kind == "oracle") {
    const Field field = Field::parse(j.at("field").get<std::string>());
    const DiagonalEntries form = entries_from_json(j.at("form"), field);
    const auto ideals = enumerate_ideals(build_orthogonal_algebra(field, form).m);
    std::vector<Subspace> embedded;
    for (const auto& s : j.at("witnesses").at("ideals")) embedded.push_back(subspace_from_json(s, field, 6));
    std::vector<Check> out = oracle_checks(classify(field, form), ideals);
    out.push_back({"embedded_ideals_reproduced", embedded == ideals});
    return out;
  }
  return check_certificate(certificate_from_json(j));
}

std::vector<Check> oracle_checks(const DecompositionCertificate& cert, const std::vector<Subspace>& ideals) {
  auto has = [&](const Subspace& s) { return std::find(ideals.begin(), ideals.end(), s) != ideals.end(); };
  const Field& f = cert.field;
  const Subspace zero(f, 6);
  const Subspace full = Subspace::full(f, 6);
  std::vector<Check> out{{"zero_and_M_enumerated", has(zero) && has(full)}};
  if (const auto* t = std::get_if<TwoSimpleIdeals>(&cert.evidence)) {
    out.push_back({"exactly_4_ideals", ideals.size() == 4});
    out.push_back({"I1_enumerated", has(t->first)});
    out.push_back({"I2_enumerated", has(t->second)});
  } else if (const auto* s = std::get_if<SemidirectNR>(&cert.evidence)) {
    out.push_back({"R_enumerated", has(s->r)});
    out.push_back({"N_not_an_ideal", !has(s->n)});
  } else {
    out.push_back({"exactly_2_ideals", ideals.size() == 2});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string form_text(const DiagonalEntries& e) {
  return "diag(" + e[0].to_string() + ", " + e[1].to_string() + ", " + e[2].to_string() + ", " + e[3].to_string() + ")";
}

void checks_text(std::ostringstream& os, const std::vector<Check>& checks) {
  for (const auto& c : checks) os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << '\n';
}

void subspace_text(std::ostringstream& os, const std::string& name, const Subspace& s) {
  os << "  " << name << " (dim " << s.dim() << "):\n";
  for (const auto& v : s.basis_vectors()) os << "    " << to_string(v) << '\n';
}

}  // namespace

std::string render_text(const TheoremReport& r) {
  std::ostringstream os;
  os << "field: " << r.field.to_string() << '\n'
     << "form: " << form_text(r.entries) << '\n'
     << "D = " << r.discriminant.to_string() << '\n'
     << "dim L(f) = " << r.dim_l << ", dim M = " << r.dim_m << ", dim L(f|W) = " << r.standard.dim_lw
     << ", dim [L(f|W),L(f|W)] = " << r.standard.dim_lw_derived << '\n'
     << "W = span(e1, e2, e3): tables " << (r.standard.equal ? "equal" : "DIFFER") << '\n'
     << "random W (seed " << r.seed << ", attempt " << r.attempts << "), orthogonal values ("
     << r.random_w.orthogonal_diagonal[0].to_string() << ", " << r.random_w.orthogonal_diagonal[1].to_string() << ", "
     << r.random_w.orthogonal_diagonal[2].to_string() << ", " << r.random_w.orthogonal_diagonal[3].to_string()
     << "): tables " << (r.random_w.equal ? "equal" : "DIFFER") << '\n';
  for (const auto& v : r.random_w.w.basis_vectors()) os << "    " << to_string(v) << '\n';
  checks_text(os, theorem_checks(r));
  os << (r.equal ? "verified: " : "FAILED: ") << "M = [L(f|W),L(f|W)] (x) F[X]/(X^2 - " << wrap(r.discriminant.to_string())
     << ")\n";
  return os.str();
}

std::string render_text(const DecompositionCertificate& c) {
  std::ostringstream os;
  os << "field: " << c.field.to_string() << '\n'
     << "form: " << form_text(c.form) << '\n'
     << "D = " << c.discriminant.to_string() << '\n'
     << "case: " << case_name(c.which()) << '\n';
  if (const auto* t = std::get_if<TwoSimpleIdeals>(&c.evidence)) {
    os << "M is the direct sum of two 3-dimensional simple ideals\n";
    subspace_text(os, "I1", t->first);
    subspace_text(os, "I2", t->second);
  } else if (const auto* s = std::get_if<SemidirectNR>(&c.evidence)) {
    os << "M = N x| R with N simple of dimension 3 and R the solvable radical\n";
    subspace_text(os, "N", s->n);
    subspace_text(os, "R", s->r);
  } else {
    const auto& d = std::get<SimpleByDescent>(c.evidence);
    os << "M is simple; K = " << d.descent.extension.to_string() << '\n';
    for (const auto& st : d.descent.steps) os << "  " << st.rule << ": " << st.statement << '\n';
  }
  os << "checks:\n";
  checks_text(os, c.checks);
  return os.str();
}

std::string render_text(const CounterexampleReport& r) {
  std::ostringstream os;
  os << "p = " << r.p << ", F = " << r.base.to_string() << ", s = " << r.s.to_string() << '\n'
     << "K = " << r.extension.to_string() << " (" << r.p_simple.embedding << ")\n"
     << "L: dim " << r.l_dim << (r.l_perfect ? ", perfect" : ", NOT perfect") << '\n'
     << "P = L (x) K: dim " << r.p_dim_over_base << " over F, " << r.p_dim_over_extension << " over K\n"
     << "P (x) K: dim " << r.tensor_dim << " over K\n";
  subspace_text(os, "R", r.radical);
  os << "(P (x) K) / R: dim " << r.quotient_dim << (r.quotient_perfect ? ", perfect" : ", NOT perfect") << '\n'
     << "checks:\n";
  checks_text(os, r.checks);
  return os.str();
}

}  // namespace orthocurrent
