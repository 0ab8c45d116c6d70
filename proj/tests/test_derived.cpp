#include "catch_amalgamated.hpp"

#include "schreier/derived.hpp"
#include "schreier/permutation.hpp"
#include "schreier/rewriting.hpp"

using namespace schreier;

TEST_CASE("displayed instances of the simplified list") {
  auto gvb = simplified_relators(GroupFamily::GVB, 5);
  auto find = [&](const std::string& name) -> const RelatorSchema& {
    for (const auto& s : gvb)
      if (s.name() == name) return s;
    FAIL("no relator " << name);
    throw;
  };
  CHECK(find("alpha1-trivial").instantiate({{"m", 5}}) == parse_word("a[5,0,1]"));
  CHECK(find("alpha1-trivial").enumerate(1).size() == 3);
  CHECK(find("alpha12-braid").instantiate({{"m", 0}, {"k", 0}}) ==
        parse_word("a[0,0,1] a[1,0,2] a[2,0,1] a[2,0,2]^-1 a[1,0,1]^-1 a[0,0,2]^-1"));
  CHECK(find("alpha12-braid").enumerate(1).size() == 9);
  CHECK(gvb.size() == 22);
  CHECK(simplified_relators(GroupFamily::SG, 5).size() == 19);
}

TEST_CASE("strand renaming round trip") {
  Generator a(kAlpha, {0, 0, 4}), b(kBeta, {-2, 0, 3});
  CHECK(unrename(Generator(kAlphaStrand, {4})) == a);
  CHECK(unrename(Generator(kBetaStrand, {-2, 3})) == b);
  for (const auto& r : strand_renamings()) {
    if (auto x = r.apply(a)) CHECK(*r.unapply(*x) == a);
    if (auto x = r.apply(b)) CHECK(*r.unapply(*x) == b);
    CHECK_FALSE(r.apply(Generator(kAlpha, {0, 0, 2})));
    CHECK_FALSE(r.apply(Generator(kBeta, {0, 1, 3})));
  }
}

TEST_CASE("rewritten raw list matches the hand transcription") {
  for (GroupFamily g : {GroupFamily::GVB, GroupFamily::SG})
    for (int n = 3; n <= 6; ++n)
      CHECK(schema_sets_equal(raw_derived(g, n), transcribed_raw_relators(g, n), 3));
}

TEST_CASE("simplified relators hold in the permutation images of the ambient group") {
  // Both groups map onto S_n with sigma_i and rho_i going to (i, i+1), and
  // also with rho_i going to the identity.
  for (GroupFamily g : {GroupFamily::GVB, GroupFamily::SG})
    for (int n = 3; n <= 6; ++n)
      for (bool rho_moves : {true, false}) {
        PermutationRep rep = symmetric_rep(static_cast<std::size_t>(n), rho_moves);
        for (const auto& s : simplified_relators(g, n))
          for (const auto& inst : s.enumerate(2)) {
            Word ambient = expand(unrename(inst.word));
            INFO(to_string(g) << n << " " << s.name() << " " << to_string(inst.bindings));
            CHECK(evaluate(ambient, rep, static_cast<std::size_t>(n)).is_identity());
          }
      }
}

TEST_CASE("simplification replays onto the listed relators") {
  for (GroupFamily g : {GroupFamily::GVB, GroupFamily::SG})
    for (int n = 3; n <= 4; ++n) {
      SimplificationReport r = verify_simplification(g, n, 4);
      INFO(to_string(g) << n);
      CHECK(r.equal);
      CHECK(r.eliminated > 0);
      CHECK(r.raw_interior == r.simplified_interior);
    }
}
