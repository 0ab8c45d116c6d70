#include "catch_amalgamated.hpp"

#include "schreier/catalog.hpp"
#include "schreier/error.hpp"
#include "schreier/schema.hpp"

using namespace schreier;

TEST_CASE("instantiating catalog relators") {
  PresentationSchema b5 = catalog(GroupFamily::B, 5);
  const RelatorSchema* far = b5.find("sigma-far-commute");
  REQUIRE(far);
  CHECK(far->instantiate({{"i", 1}, {"j", 3}}) == parse_word("s1 s3 s1^-1 s3^-1"));
  CHECK_THROWS_AS(far->instantiate({{"i", 1}, {"j", 2}}), GuardViolation);
  CHECK_THROWS_AS(far->instantiate({{"i", 1}, {"j", 5}}), GuardViolation);

  const RelatorSchema* braid = b5.find("sigma-braid");
  REQUIRE(braid);
  CHECK(braid->instantiate({{"i", 3}}) == parse_word("s3 s4 s3 s4^-1 s3^-1 s4^-1"));
  // i + 1 <= n - 1 is an implicit guard.
  CHECK_THROWS_AS(braid->instantiate({{"i", 4}}), GuardViolation);
  CHECK(braid->explicit_guards().empty());
}

TEST_CASE("enumeration counts follow the index domains") {
  PresentationSchema b5 = catalog(GroupFamily::B, 5);
  // Ordered pairs in 1..4 at distance > 1.
  CHECK(b5.find("sigma-far-commute")->enumerate(0).size() == 6);
  CHECK(b5.find("sigma-braid")->enumerate(0).size() == 3);
  for (int n = 3; n <= 7; ++n) {
    PresentationSchema g = catalog(GroupFamily::GVB, n);
    std::size_t pairs = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) pairs += (i - j > 1 || j - i > 1);
    CHECK(g.find("mixed-far-commute")->enumerate(0).size() == pairs);
    CHECK(g.find("rho-sigma-sigma")->enumerate(0).size() == static_cast<std::size_t>(n - 2));
  }
}

TEST_CASE("kernel relators have trivial phi image") {
  // sigma^2 relators of S, VB and WB are not in the kernel of phi.
  for (GroupFamily g : {GroupFamily::B, GroupFamily::GVB, GroupFamily::SG, GroupFamily::UB})
    for (int n = 3; n <= 6; ++n)
      for (const auto& s : catalog(g, n).relators)
        for (const auto& inst : s.enumerate(0)) {
          Coset c = phi_image(inst.word);
          CHECK(c.m == 0);
          CHECK(c.k == 0);
        }
  Coset sq = phi_image(catalog(GroupFamily::S, 3).find("sigma-square")->instantiate({{"i", 1}}));
  CHECK(sq.m == 2);
}

TEST_CASE("catalog membership of relator families") {
  auto names = [](GroupFamily g) {
    std::set<std::string> out;
    for (const auto& r : catalog(g, 4).relators) out.insert(r.name());
    return out;
  };
  CHECK(names(GroupFamily::B) == std::set<std::string>{"sigma-far-commute", "sigma-braid"});
  CHECK(names(GroupFamily::SG).count("sigma-rho-commute"));
  CHECK_FALSE(names(GroupFamily::GVB).count("sigma-rho-commute"));
  CHECK(names(GroupFamily::WB).count("forbidden"));
  CHECK(names(GroupFamily::UB).size() == 4);
  CHECK_THROWS_AS(catalog(GroupFamily::B, 2), ValidationError);
}

TEST_CASE("relator set comparison") {
  auto a = catalog(GroupFamily::GVB, 4).relators;
  auto b = a;
  std::reverse(b.begin(), b.end());
  CHECK(schema_sets_equal(a, b, 0));
  b.pop_back();
  CHECK_FALSE(schema_sets_equal(a, b, 0));
  auto cmp = compare_relator_sets(canonical_instances(a, 0), canonical_instances(b, 0));
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.only_right.empty());
  CHECK_FALSE(cmp.only_left.empty());
}

TEST_CASE("involution detection") {
  std::vector<Word> words = {parse_word("s1^2"), parse_word("s2^-2"), parse_word("r1^3"),
                             parse_word("s1 s2")};
  auto inv = detect_involutions(words);
  CHECK(inv == std::set<Generator>{Generator("s", {1}), Generator("s", {2})});
}

TEST_CASE("schema construction rejects malformed relators") {
  AlphabetPtr a = ambient_alphabet(GroupFamily::B, 4);
  using E = AffineExpr;
  CHECK_THROWS_AS(RelatorSchema("bad", {"i"}, {{"s", {E::var("j")}, 1}}, {}, a), ValidationError);
  CHECK_THROWS_AS(RelatorSchema("bad", {"i"}, {{"q", {E::var("i")}, 1}}, {}, a), ValidationError);
  CHECK_THROWS_AS(RelatorSchema("bad", {"i"}, {{"s", {E::var("i")}, 0}}, {}, a), ValidationError);
}
