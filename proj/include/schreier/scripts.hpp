#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schreier/tietze.hpp"

namespace schreier {

// Picks the relator instance used to eliminate a target; nullopt when the
// script has no relator for it.
using Locator = std::function<std::optional<RelatorTag>(const Generator&)>;

struct EliminatePhase {
  std::string label;
  std::vector<Generator> targets;  // in elimination order
  Locator locate;
};

// Quotient: add every instance of the schemas supported in the window.
struct QuotientPhase {
  std::string label;
  std::vector<RelatorSchema> schemas;
};

struct RenamePhase {
  std::string label;
  std::vector<std::pair<Generator, Generator>> renames;  // from -> to
};

using ScriptPhase = std::variant<EliminatePhase, QuotientPhase, RenamePhase>;

struct Script {
  std::string name;
  std::string description;
  std::vector<ScriptPhase> phases;
};

struct ScriptSetup {
  Script script;
  TruncatedPresentation input;
  // Interior generators expected to remain, when the script claims a set.
  std::optional<std::vector<Generator>> expected_survivors;
};

struct ScriptInfo {
  std::string name;
  std::string description;
  std::int64_t default_n;
};
const std::vector<ScriptInfo>& script_catalog();

// Throws ValidationError for unknown names or unsupported n.
ScriptSetup setup_script(const std::string& name, std::int64_t n, std::int64_t window);

struct ReplayOptions {
  // Recompute abelian invariants after every elimination and compare.
  bool check_invariants = false;
};

struct ReplayResult {
  TruncatedPresentation presentation;
  std::vector<std::string> transcript;
  std::size_t eliminated = 0;
  std::size_t skipped = 0;
  std::size_t invariant_checks = 0;
  std::vector<std::string> invariant_failures;
};

// Steps whose relator is missing or not isolating are skipped (and
// recorded) for boundary targets; for interior targets they throw
// ReplayFailure naming the phase.
ReplayResult replay(const Script& script, TruncatedPresentation input,
                    const ReplayOptions& options = {});

// Interior generators left after replay, sorted.
std::vector<Generator> surviving_interior(const TruncatedPresentation& p);

}  // namespace schreier
