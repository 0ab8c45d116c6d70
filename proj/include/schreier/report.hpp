#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "schreier/parallel.hpp"

namespace schreier {

enum class Verdict { verified, refuted, externally_cited, out_of_scope, verified_as_consequence };
std::string to_string(Verdict v);

struct RunParameters {
  std::vector<std::int64_t> n;        // strand counts
  std::vector<std::int64_t> windows;  // truncation windows M
  Execution exec = Execution::parallel;
};

struct ClaimResult {
  std::string id;
  std::string group;      // "GVB", "SG", "UB" or "ambient"
  std::string statement;  // the claim being checked
  std::string parameters;
  Verdict verdict = Verdict::out_of_scope;
  std::string detail;
  std::vector<std::string> transcript;
};

// A registry entry binds a claim to the computation that checks it.
struct Claim {
  std::string id;
  std::string group;
  std::string statement;
  std::function<ClaimResult(const Claim&, const RunParameters&)> check;
};

const std::vector<Claim>& claim_registry();

struct VerificationReport {
  RunParameters parameters;
  std::vector<ClaimResult> results;  // registry order
  bool any_refuted() const;
  const ClaimResult* find(const std::string& id) const;
};

// `filter`: comma-separated claim ids or id prefixes, or "all".  `group`:
// "gvb", "sg" or "all" (ambient and diagram claims are always kept).
// Throws ValidationError for filters that match nothing.
std::vector<const Claim*> select_claims(const std::string& filter, const std::string& group);

// Claims run concurrently; results are merged in registry order.
VerificationReport run_claims(const std::vector<const Claim*>& claims, const RunParameters& p);

// Summary rows for GVB_n' and SG_n' (finitely generated / perfect /
// finitely presented) followed by one line per claim.
std::string emit_table(const VerificationReport& r);
// One JSON object per claim.
std::string emit_json_lines(const VerificationReport& r);

}  // namespace schreier
