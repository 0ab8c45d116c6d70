#include "catch_amalgamated.hpp"

#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "schreier/error.hpp"
#include "schreier/report.hpp"

using namespace schreier;

namespace {

RunParameters small_run(Execution exec = Execution::parallel) { return {{5}, {5}, exec}; }

}  // namespace

TEST_CASE("claim ids are unique and groups known") {
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK(std::set<std::string>{"GVB", "SG", "UB", "ambient"}.count(c.group));
    CHECK_FALSE(c.statement.empty());
  }
  CHECK(ids.count("GVB-fg-n"));
  CHECK(ids.count("SG-perfect"));
}

TEST_CASE("claim selection") {
  auto sg = select_claims("all", "sg");
  for (const auto* c : sg) CHECK(c->group != "GVB");
  auto gvb = select_claims("all", "GVB");
  for (const auto* c : gvb) CHECK(c->group != "SG");
  CHECK(select_claims("all", "all").size() == claim_registry().size());
  auto prefix = select_claims("SG-not", "all");
  CHECK(prefix.size() == 4);
  CHECK_THROWS_AS(select_claims("no-such-claim", "all"), ValidationError);
  CHECK_THROWS_AS(select_claims("all", "braid"), ValidationError);
  CHECK_THROWS_AS(select_claims("GVB-fg-n", "sg"), ValidationError);
}

TEST_CASE("table rows follow the selected groups") {
  VerificationReport r = run_claims(select_claims("SG-fg-n,SG-finitely-presented", "all"),
                                    small_run());
  REQUIRE(r.results.size() == 2);
  CHECK(r.find("SG-fg-n")->verdict == Verdict::verified);
  CHECK(r.find("SG-finitely-presented")->verdict == Verdict::out_of_scope);
  CHECK_FALSE(r.any_refuted());
  std::string table = emit_table(r);
  CHECK(table.find("SG_n'") != std::string::npos);
  CHECK(table.find("GVB_n'") == std::string::npos);
  CHECK(table.find("out-of-scope (open question)") != std::string::npos);
  CHECK(table.find("partial") != std::string::npos);
}

TEST_CASE("json lines carry one object per claim") {
  VerificationReport r = run_claims(select_claims("GVB-finitely-presented,GVB-not-perfect-4", "all"),
                                    small_run());
  std::istringstream in(emit_json_lines(r));
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("claim"));
    CHECK(j.contains("verdict"));
    ++lines;
  }
  CHECK(lines == 2);
  CHECK(r.find("GVB-not-perfect-4")->verdict == Verdict::externally_cited);
}

TEST_CASE("refuted claims and errors set the failure flag") {
  Claim bad{"bad", "SG", "always fails",
            [](const Claim& c, const RunParameters&) {
              return ClaimResult{c.id, c.group, c.statement, "", Verdict::refuted, "no", {}};
            }};
  Claim throws{"throws", "SG", "throws", [](const Claim&, const RunParameters&) -> ClaimResult {
                 throw Error("boom");
               }};
  VerificationReport r = run_claims({&bad}, small_run());
  CHECK(r.any_refuted());
  r = run_claims({&throws}, small_run());
  CHECK(r.any_refuted());
  CHECK(r.results[0].detail.find("boom") != std::string::npos);
  CHECK_THROWS_AS(run_claims({&bad}, RunParameters{{}, {5}}), ValidationError);
}

TEST_CASE("serial and parallel runs agree") {
  auto claims = select_claims("SG-fg-n,expansion-identity", "all");
  VerificationReport a = run_claims(claims, small_run(Execution::serial));
  VerificationReport b = run_claims(claims, small_run(Execution::parallel));
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].id == b.results[i].id);
    CHECK(a.results[i].verdict == b.results[i].verdict);
    CHECK(a.results[i].detail == b.results[i].detail);
  }
  CHECK(emit_json_lines(a) == emit_json_lines(b));
}
