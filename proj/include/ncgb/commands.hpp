#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncgb/endo.hpp"
#include "ncgb/generator_set.hpp"

namespace ncgb {

struct RunConfig {
  std::string command;
  int n = 3;
  std::optional<int> bound;              // per-command default when unset
  std::vector<std::string> drop;         // family names or member ids
  std::optional<SemigroupSpec> semigroup;
  std::string out;                       // JSON report path, empty = none
  int jobs = 0;                          // 0 = all cores

  // Command-specific inputs.
  std::string basis = "gamma3";          // reduce / normal-words: "gamma3" or "tideal"
  std::string direction = "psi";         // bijection: "psi", "theta" or "roundtrip"
  std::vector<std::string> inputs;       // polynomial text, index sequence, or completion seed
  bool list_words = false;               // normal-words

  int effective_jobs() const;
  void validate() const;                 // throws std::invalid_argument
};

struct CommandResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string text;                      // human-readable output for stdout
};

inline constexpr int kDefaultGamma3Bound = 6;
inline constexpr int kDefaultTIdealBound = 8;

/// Builds gamma3_basis or tideal_basis for the config and removes the
/// dropped members.  Throws std::invalid_argument for a selector that matches nothing.
GeneratorSet configured_basis(const RunConfig& cfg, const std::string& which);

CommandResult cmd_verify_gamma3(const RunConfig& cfg);
CommandResult cmd_verify_tideal(const RunConfig& cfg);
CommandResult cmd_reduce(const RunConfig& cfg);
CommandResult cmd_normal_words(const RunConfig& cfg);
CommandResult cmd_bijection(const RunConfig& cfg);
CommandResult cmd_grassmann_check(const RunConfig& cfg);
CommandResult cmd_complete(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandResult run_command(const RunConfig& cfg);

/// "1,2,1" or "1 2 1" -> word; the empty string is the empty word.
Word parse_sequence(const std::string& text);

}  // namespace ncgb
