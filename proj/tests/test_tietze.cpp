#include "catch_amalgamated.hpp"

#include "schreier/abelian.hpp"
#include "schreier/error.hpp"
#include "schreier/tietze.hpp"

using namespace schreier;

namespace {

AlphabetPtr line_alphabet() {
  auto a = std::make_shared<Alphabet>();
  a->declare({"x", {IndexRange::all()}});
  a->declare({"y", {}});
  return a;
}

Generator X(std::int64_t i) { return Generator("x", {i}); }
const Generator Y("y", std::initializer_list<std::int64_t>{});

// x[i+1] = y x[i] y^-1 for all i, plus x[0]^2.
TruncatedPresentation chain(std::int64_t window) {
  using E = AffineExpr;
  AlphabetPtr a = line_alphabet();
  RelatorSchema shift("shift", {"i"},
                      {{"x", {E::var("i") + 1}, -1}, {"y", {}, 1}, {"x", {E::var("i")}, 1},
                       {"y", {}, -1}},
                      {}, a);
  RelatorSchema square("square", {}, {{"x", {E(0)}, 2}}, {}, a);
  return TruncatedPresentation::truncate({shift, square}, a, window);
}

}  // namespace

TEST_CASE("truncation keeps fully supported instances") {
  TruncatedPresentation p = chain(3);
  CHECK(p.generators().size() == 8);  // x[-3..3], y
  // shift instances i = -3..2 plus the square.
  CHECK(p.live_relators().size() == 7);
  CHECK(p.is_interior(X(1)));
  CHECK_FALSE(p.is_interior(X(2)));
  CHECK(p.is_interior(Y));
  CHECK(p.find({"shift", {{"i", 2}}}).has_value());
  CHECK_FALSE(p.find({"shift", {{"i", 3}}}).has_value());
}

TEST_CASE("isolating a generator and substituting it") {
  TruncatedPresentation p = chain(3);
  auto id = *p.find({"shift", {{"i", 0}}});
  EliminationStep step = isolate(p, X(1), id);
  CHECK(step.expression == parse_word("y x0 y^-1"));
  p.apply(step);
  CHECK_FALSE(p.has_generator(X(1)));
  CHECK_FALSE(p.live(id));
  auto next = *p.find({"shift", {{"i", 1}}});
  CHECK(p.relator(next).word == parse_word("x2^-1 y^2 x0 y^-2"));
  for (std::size_t r : p.live_relators())
    for (const auto& l : p.relator(r).word.runs()) CHECK(l.gen != X(1));
}

TEST_CASE("isolation errors") {
  TruncatedPresentation p = chain(3);
  auto sq = *p.find({"square", {}});
  CHECK_THROWS_AS(isolate(p, X(0), sq), Error);  // exponent 2
  auto id = *p.find({"shift", {{"i", 0}}});
  CHECK_THROWS_AS(isolate(p, X(2), id), Error);  // absent
  EliminationStep bogus{X(1), id, parse_word("y")};
  CHECK_THROWS_AS(p.apply(bogus), Error);
  CHECK_THROWS_AS(p.substitute(X(1), parse_word("x1 y")), ValidationError);
}

TEST_CASE("eliminations preserve the abelian invariants") {
  TruncatedPresentation p = chain(4);
  AbelianInvariants before = abelian_invariants(p);
  CHECK(before.free_rank == 1);  // y free, every x[i] equals x[0] of order 2
  REQUIRE(before.torsion.size() == 1);
  CHECK(before.torsion[0] == 2);
  for (std::int64_t i = 1; i <= 4; ++i) {
    p.apply(isolate(p, X(i), *p.find({"shift", {{"i", i - 1}}})));
    CHECK(abelian_invariants(p) == before);
  }
  for (std::int64_t i = -1; i >= -4; --i) {
    p.apply(isolate(p, X(i), *p.find({"shift", {{"i", i}}})));
    CHECK(abelian_invariants(p) == before);
  }
  CHECK(p.generators().size() == 2);
}

TEST_CASE("dropping generators made trivial by single-letter relators") {
  AlphabetPtr a = line_alphabet();
  TruncatedPresentation p(a, 2);
  for (std::int64_t i = -2; i <= 2; ++i) p.add_generator(X(i));
  p.add_generator(Y);
  p.add_relator({{"a", {}}, parse_word("x0")});
  p.add_relator({{"b", {}}, parse_word("x0 x1^-1")});
  p.add_relator({{"c", {}}, parse_word("x1 y x1^-1 y^-1 x2")});
  auto removed = drop_trivial_generators(p);
  CHECK(removed.size() == 3);
  CHECK(p.generators().size() == 3);
  CHECK(interior_relator_set(p).empty());
  CHECK_THROWS_AS(p.add_relator({{"d", {}}, parse_word("x0")}), ValidationError);
}
