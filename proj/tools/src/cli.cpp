#include "orthocurrent/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "orthocurrent/forms.hpp"
#include "orthocurrent/oracle.hpp"
#include "orthocurrent/report.hpp"

namespace orthocurrent::cli {

namespace {

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorKind::Usage, message); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') usage(std::string("malformed seed in ") + origin);
  return v;
}

Field parse_field(const std::string& literal) {
  try {
    return Field::parse(literal);
  } catch (const Error& e) {
    usage("malformed field literal '" + literal + "': " + e.what());
  }
}

Matrix gram_from_json(const std::string& text, const Field& field) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    usage(std::string("--gram is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) usage("--gram must be a square array of arrays");
  const std::size_t n = j.size();
  std::vector<Vector> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != n) usage("--gram must be a square array of arrays");
    try {
      rows.push_back(vector_from_json(r, field));
    } catch (const Error& e) {
      usage(std::string("malformed --gram entry: ") + e.what());
    }
  }
  return Matrix::from_rows(field, rows, n);
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Classify: return "classify";
    case Command::Table: return "table";
    case Command::Oracle: return "oracle";
    case Command::Counterexample: return "counterexample";
  }
  return "";
}

}  // namespace

CommandSpec parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Orthogonal Lie algebras of 4-dimensional quadratic forms as current algebras"};
  app.require_subcommand(1);

  CommandSpec spec;
  std::string form_text;
  std::string gram_text;
  std::string seed_text;
  unsigned q = 0;

  auto add_form_options = [&](CLI::App* sub) {
    sub->add_option("--field", spec.field_literal, "Q, Fp, Fp(t) or <base>[sqrt D]")->required();
    auto* form = sub->add_option("--form", form_text, "diagonal entries a,b,c,d");
    auto* gram = sub->add_option("--gram", gram_text, "symmetric Gram matrix as JSON");
    form->excludes(gram);
    sub->add_flag("--json", spec.json, "emit JSON");
  };

  auto* verify = app.add_subcommand("verify", "check M against the current algebra on random and standard W");
  add_form_options(verify);
  verify->add_option("--seed", seed_text, "random seed (default 0)");
  verify->add_option("--trials", spec.trials, "number of consecutive seeds to check")->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "emit a decomposition certificate");
  add_form_options(classify_cmd);

  auto* table = app.add_subcommand("table", "print the multiplication table of f1..h3");
  add_form_options(table);

  auto* oracle = app.add_subcommand("oracle", "enumerate every ideal of M over F2, F3 or F5");
  oracle->add_option("--field", spec.field_literal, "F2, F3 or F5");
  oracle->add_option("--q", q, "field order 2, 3 or 5");
  auto* oform = oracle->add_option("--form", form_text, "diagonal entries a,b,c,d");
  auto* ogram = oracle->add_option("--gram", gram_text, "symmetric Gram matrix as JSON");
  oform->excludes(ogram);
  oracle->add_flag("--json", spec.json, "emit JSON");

  auto* counter = app.add_subcommand("counterexample", "imperfect-field counterexample over Fp(t)");
  counter->add_option("--p", spec.p, "2 or 3")->required();
  counter->add_flag("--json", spec.json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "verify") spec.command = Command::Verify;
  if (name == "classify") spec.command = Command::Classify;
  if (name == "table") spec.command = Command::Table;
  if (name == "oracle") spec.command = Command::Oracle;
  if (name == "counterexample") spec.command = Command::Counterexample;

  if (spec.command == Command::Counterexample) {
    if (spec.p != 2 && spec.p != 3) usage("--p must be 2 or 3");
    return spec;
  }

  if (spec.command == Command::Oracle) {
    if (q != 0) {
      if (q != 2 && q != 3 && q != 5) usage("--q must be 2, 3 or 5");
      const std::string lit = "F" + std::to_string(q);
      if (!spec.field_literal.empty() && spec.field_literal != lit) usage("--q disagrees with --field");
      spec.field_literal = lit;
    }
    if (spec.field_literal.empty()) usage("oracle needs --field or --q");
  }

  const Field field = parse_field(spec.field_literal);
  if (spec.command == Command::Oracle) {
    const bool finite = field.kind() == FieldKind::PrimeField &&
                        (field.characteristic() == 2 || field.characteristic() == 3 || field.characteristic() == 5);
    if (!finite) usage("oracle requires a finite field F2, F3 or F5");
  }

  if (!gram_text.empty()) {
    gram_from_json(gram_text, field);
    spec.gram_json = gram_text;
  } else if (!form_text.empty()) {
    spec.form = split_commas(form_text);
    if (spec.form.size() != 4) usage("--form needs exactly four comma-separated entries");
    for (const auto& e : spec.form) {
      try {
        parse_scalar(e, field);
      } catch (const Error& err) {
        usage("malformed form entry '" + e + "': " + err.what());
      }
    }
  } else {
    usage(std::string(command_name(spec.command)) + " needs --form or --gram");
  }

  if (spec.command == Command::Verify) {
    if (!seed_text.empty()) {
      spec.seed = parse_seed(seed_text, "--seed");
    } else if (const char* env = std::getenv("ORTHOCURRENT_SEED"); env != nullptr && *env != '\0') {
      spec.seed = parse_seed(env, "ORTHOCURRENT_SEED");
    }
  }
  return spec;
}

std::pair<Field, DiagonalEntries> resolve_form(const CommandSpec& spec) {
  const Field field = Field::parse(spec.field_literal);
  if (spec.gram_json) {
    const BilinearForm f = make_form(gram_from_json(*spec.gram_json, field));
    if (f.dim() != 4) throw Error(ErrorKind::WrongDimension, "the Gram matrix must be 4x4");
    const auto ortho = orthogonalize(f);
    const auto& d = ortho.diagonal;
    return {field, DiagonalEntries{d[0], d[1], d[2], d[3]}};
  }
  return {field, DiagonalEntries{parse_scalar(spec.form[0], field), parse_scalar(spec.form[1], field),
                                 parse_scalar(spec.form[2], field), parse_scalar(spec.form[3], field)}};
}

namespace {

Outcome run_verify(const CommandSpec& spec) {
  const auto [field, entries] = resolve_form(spec);
  TheoremReport first = verify_theorem(field, entries, spec.seed);
  bool ok = first.equal && first.basis_spans_m;
  std::vector<std::pair<std::uint64_t, bool>> more;
  for (std::size_t i = 1; i < spec.trials; ++i) {
    TheoremReport r = verify_theorem(field, entries, spec.seed + i);
    more.emplace_back(spec.seed + i, r.equal);
    ok = ok && r.equal && r.basis_spans_m;
  }
  std::string out;
  if (spec.json) {
    json j = to_json(first);
    if (!more.empty()) {
      json trials = json::array();
      for (const auto& [seed, eq] : more) trials.push_back({{"seed", seed}, {"equal", eq}});
      j["additional_trials"] = trials;
    }
    out = j.dump(2) + "\n";
  } else {
    out = render_text(first);
    for (const auto& [seed, eq] : more) out += "seed " + std::to_string(seed) + ": tables " + (eq ? "equal" : "DIFFER") + "\n";
  }
  return {ok ? 0 : 1, out};
}

Outcome run_classify(const CommandSpec& spec) {
  const auto [field, entries] = resolve_form(spec);
  const DecompositionCertificate cert = classify(field, entries);
  return {all_ok(cert.checks) ? 0 : 1, spec.json ? to_json(cert).dump(2) + "\n" : render_text(cert)};
}

Outcome run_table(const CommandSpec& spec) {
  const auto [field, entries] = resolve_form(spec);
  const auto lines = table_lines(explicit_table(build_orthogonal_algebra(field, entries), entries), entries);
  const bool ok = std::all_of(lines.begin(), lines.end(), [](const TableLine& l) { return l.ok; });
  if (spec.json) return {ok ? 0 : 1, table_json(field, entries, lines).dump(2) + "\n"};
  const FieldElement d = entries[0] * entries[1] * entries[2] * entries[3];
  std::ostringstream os;
  os << "field: " << field.to_string() << '\n'
     << "a = " << entries[0].to_string() << ", b = " << entries[1].to_string() << ", c = " << entries[2].to_string()
     << ", d = " << entries[3].to_string() << ", D = " << d.to_string() << '\n';
  for (const auto& l : lines) os << l.render() << '\n';
  return {ok ? 0 : 1, os.str()};
}

Outcome run_oracle(const CommandSpec& spec) {
  const auto [field, entries] = resolve_form(spec);
  const auto ideals = enumerate_ideals(build_orthogonal_algebra(field, entries).m);
  const auto cert = classify(field, entries);
  std::vector<Check> checks = cert.checks;
  for (auto& c : oracle_checks(cert, ideals)) checks.push_back(std::move(c));
  const bool ok = all_ok(checks);
  if (spec.json) return {ok ? 0 : 1, oracle_json(field, entries, ideals, checks).dump(2) + "\n"};
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& s : ideals) ++histogram[s.dim()];
  std::ostringstream os;
  os << "field: " << field.to_string() << ", certificate: " << case_name(cert.which()) << '\n'
     << "ideals of M: " << ideals.size() << '\n';
  for (const auto& [dim, count] : histogram) os << "  dim " << dim << ": " << count << '\n';
  for (const auto& s : ideals) {
    os << "ideal of dim " << s.dim() << ":\n";
    for (const auto& v : s.basis_vectors()) os << "    " << to_string(v) << '\n';
  }
  for (const auto& c : checks) os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << '\n';
  return {ok ? 0 : 1, os.str()};
}

Outcome run_counterexample(const CommandSpec& spec) {
  const CounterexampleReport r = counterexample_demo(spec.p);
  return {all_ok(r.checks) ? 0 : 1, spec.json ? to_json(r).dump(2) + "\n" : render_text(r)};
}

}  // namespace

Outcome execute(const CommandSpec& spec) {
  try {
    switch (spec.command) {
      case Command::Verify: return run_verify(spec);
      case Command::Classify: return run_classify(spec);
      case Command::Table: return run_table(spec);
      case Command::Oracle: return run_oracle(spec);
      case Command::Counterexample: return run_counterexample(spec);
    }
  } catch (const Error& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }
  return {1, "error: unknown command\n"};
}

Outcome run(const std::vector<std::string>& args) {
  try {
    return execute(parse_args(args));
  } catch (const CLI::CallForHelp&) {
    std::ostringstream os;
    os << "usage:\n"
          "  orthocurrent verify --field <F> --form a,b,c,d [--seed N] [--trials N] [--json]\n"
          "  orthocurrent classify --field <F> --form a,b,c,d [--json]\n"
          "  orthocurrent table --field <F> --form a,b,c,d [--json]\n"
          "  orthocurrent oracle --field F2|F3|F5 --form a,b,c,d [--json]\n"
          "  orthocurrent counterexample --p 2|3 [--json]\n"
          "--gram '<JSON matrix>' may replace --form; ORTHOCURRENT_SEED sets the default seed.\n";
    return {0, os.str()};
  } catch (const Error& e) {
    return {2, std::string(e.what()) + "\n"};
  }
}

}  // namespace orthocurrent::cli
