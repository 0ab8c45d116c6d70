#include "catch_amalgamated.hpp"

#include <algorithm>

#include "schreier/derived.hpp"
#include "schreier/error.hpp"
#include "schreier/rewriting.hpp"
#include "schreier/scripts.hpp"

using namespace schreier;

namespace {

std::vector<Generator> run(const std::string& name, std::int64_t n, std::int64_t window) {
  ScriptSetup s = setup_script(name, n, window);
  return surviving_interior(replay(s.script, std::move(s.input)).presentation);
}

std::vector<Generator> sorted(std::vector<Generator> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("GVB_4' reduces to nine generators") {
  auto got = run("gvb4-fin-gen", 4, 5);
  std::vector<Generator> want;
  for (std::int64_t m = 0; m <= 1; ++m)
    for (std::int64_t k = 0; k <= 2; ++k) want.push_back(Generator(kAlpha, {m, k, 2}));
  want.push_back(Generator(kAlpha, {0, 1, 1}));
  want.push_back(Generator(kAlphaStrand, {3}));
  want.push_back(Generator(kBetaStrand, {0, 3}));
  CHECK(got == sorted(want));
}

TEST_CASE("survivor counts for n >= 5") {
  CHECK(run("gvbn-fin-gen", 5, 5).size() == 8);
  CHECK(run("gvbn-fin-gen", 6, 5).size() == 11);
  CHECK(run("sgn-fin-gen", 5, 5).size() == 6);
  CHECK(run("sgn-fin-gen", 6, 5).size() == 8);
  for (std::int64_t n = 5; n <= 7; ++n) {
    CHECK(run("gvbn-fin-gen", n, 4).size() == static_cast<std::size_t>(3 * n - 7));
    CHECK(run("sgn-fin-gen", n, 4).size() == static_cast<std::size_t>(2 * n - 4));
  }
}

TEST_CASE("abelian invariants survive every elimination step") {
  for (const auto& info : script_catalog()) {
    std::int64_t n = info.default_n;
    ScriptSetup s = setup_script(info.name, n, 4);
    ReplayResult r = replay(s.script, std::move(s.input), {true});
    INFO(info.name);
    CHECK(r.invariant_checks == r.eliminated);
    CHECK(r.invariant_failures.empty());
  }
}

TEST_CASE("missing relators are skipped on the boundary and fatal in the interior") {
  ScriptSetup s = setup_script("gvb4-fin-gen", 4, 5);
  ReplayResult ok = replay(s.script, s.input);
  CHECK(ok.skipped > 0);
  CHECK(std::any_of(ok.transcript.begin(), ok.transcript.end(),
                    [](const std::string& l) { return l.rfind("skip ", 0) == 0; }));

  // Point an interior target at a relator that does not isolate it.
  Script broken = s.script;
  auto& phase = std::get<EliminatePhase>(broken.phases[1]);
  phase.locate = [](const Generator&) {
    return RelatorTag{"alpha1-trivial", {{"m", 0}}};
  };
  CHECK_THROWS_AS(replay(broken, s.input), ReplayFailure);
}

TEST_CASE("script setup validation") {
  CHECK_THROWS_AS(setup_script("no-such-script", 4, 4), ValidationError);
  CHECK_THROWS_AS(setup_script("gvb4-fin-gen", 5, 4), ValidationError);
  CHECK_THROWS_AS(setup_script("gvbn-fin-gen", 4, 4), ValidationError);
  CHECK_THROWS_AS(setup_script("gvb4-fin-gen", 4, -1), ValidationError);
}

TEST_CASE("transcripts are deterministic") {
  ScriptSetup a = setup_script("sgn-fin-gen", 5, 4);
  ScriptSetup b = setup_script("sgn-fin-gen", 5, 4);
  CHECK(replay(a.script, std::move(a.input)).transcript ==
        replay(b.script, std::move(b.input)).transcript);
}
