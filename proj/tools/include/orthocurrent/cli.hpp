#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthocurrent/structure.hpp"

namespace orthocurrent::cli {

enum class Command { Verify, Classify, Table, Oracle, Counterexample };

struct CommandSpec {
  Command command = Command::Verify;
  std::string field_literal;
  /// Diagonal entries as given on the command line, or empty when --gram is used.
  std::vector<std::string> form;
  /// Full Gram matrix as a JSON text; orthogonalized before use.
  std::optional<std::string> gram_json;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  unsigned p = 2;
};

struct Outcome {
  int exit_code = 0;
  std::string output;
};

/// Throws Error(Usage) on any malformed or inconsistent argument list.
/// `args` excludes the program name. ORTHOCURRENT_SEED supplies the seed
/// when --seed is absent.
CommandSpec parse_args(const std::vector<std::string>& args);

/// Exit code 0 when every check passes, 1 otherwise or on an error.
Outcome execute(const CommandSpec& spec);

/// parse_args then execute; usage errors give exit code 2, --help gives 0.
Outcome run(const std::vector<std::string>& args);

/// Field and diagonal entries for a spec, orthogonalizing --gram if given.
std::pair<Field, DiagonalEntries> resolve_form(const CommandSpec& spec);

}  // namespace orthocurrent::cli
