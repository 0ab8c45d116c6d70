#include "catch_amalgamated.hpp"

#include <random>

#include "schreier/abelian.hpp"
#include "schreier/catalog.hpp"
#include "schreier/derived.hpp"
#include "schreier/rewriting.hpp"

using namespace schreier;

namespace {

Generator A(std::int64_t m, std::int64_t k, std::int64_t i) { return Generator(kAlpha, {m, k, i}); }

std::vector<SparseRow> random_rows(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> v(-3, 3);
  std::bernoulli_distribution keep(0.3);
  std::vector<SparseRow> out(rows);
  for (auto& r : out)
    for (std::uint32_t c = 0; c < cols; ++c)
      if (keep(rng))
        if (int x = v(rng)) r.emplace_back(c, x);
  return out;
}

IntegerMatrix dense(const std::vector<SparseRow>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, x] : rows[i]) m(i, c) = x;
  return m;
}

mpz_class product(const std::vector<mpz_class>& v) {
  mpz_class p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

}  // namespace

TEST_CASE("relation matrix rows are exponent sums") {
  auto gvb = simplified_relators(GroupFamily::GVB, 4);
  std::vector<Generator> cols = {A(0, 0, 1), A(0, 0, 2), A(1, 0, 1), A(1, 0, 2), A(2, 0, 1),
                                 A(2, 0, 2)};
  std::sort(cols.begin(), cols.end());
  auto col = [&](const Generator& g) {
    return static_cast<std::uint32_t>(std::find(cols.begin(), cols.end(), g) - cols.begin());
  };
  CHECK(exponent_sums(parse_word("a[0,0,1]"), cols) == SparseRow{{col(A(0, 0, 1)), 1}});
  for (const auto& s : gvb)
    if (s.name() == "alpha12-braid") {
      SparseRow row = exponent_sums(s.instantiate({{"m", 0}, {"k", 0}}), cols);
      // Every column appears once with +1 and once with -1... except that
      // the six letters are six distinct generators: +1 for a[0,0,1],
      // a[1,0,2], a[2,0,1] and -1 for a[2,0,2], a[1,0,1], a[0,0,2].
      SparseRow want;
      for (const auto& [g, e] : std::vector<std::pair<Generator, int>>{{A(0, 0, 1), 1},
                                                                        {A(1, 0, 2), 1},
                                                                        {A(2, 0, 1), 1},
                                                                        {A(2, 0, 2), -1},
                                                                        {A(1, 0, 1), -1},
                                                                        {A(0, 0, 2), -1}})
        want.emplace_back(col(g), e);
      std::sort(want.begin(), want.end());
      CHECK(row == want);
    }
  CHECK(exponent_sums(parse_word("a[0,0,1]^-1 a[1,0,1]^-1 a[0,0,1] a[1,0,1]"), cols).empty());
}

TEST_CASE("matrix export") {
  RelationMatrix m{{A(0, 0, 1), A(0, 0, 2)}, {{{0, 2}}, {{0, -1}, {1, 3}}}};
  CHECK(m.to_text() == "2 0\n-1 3\n");
  CHECK(m.dense() == IntegerMatrix::from_rows({{2, 0}, {-1, 3}}));
}

TEST_CASE("sparse reducer agrees with dense SNF") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + trial % 9, cols = 1 + (trial / 3) % 8;
    auto r = random_rows(rng, rows, cols);
    SmithForm f = smith_normal_form(dense(r, cols));
    LatticeReducer s(cols, r, Execution::serial);
    LatticeReducer p(cols, r, Execution::parallel);
    CHECK(s.invariants() == invariants_of(f, cols));
    CHECK(p.invariants() == s.invariants());
    CHECK(s.rank() == f.rank);
  }
}

TEST_CASE("lattice membership agrees with an index oracle") {
  // v lies in the row lattice L iff adding it changes neither the rank nor
  // the product of the invariant factors (the index of L in its saturation).
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + trial % 6, cols = 1 + (trial / 5) % 6;
    auto r = random_rows(rng, rows, cols);
    LatticeReducer lattice(cols, r);
    SmithForm f = smith_normal_form(dense(r, cols));
    std::vector<SparseRow> probes = random_rows(rng, 3, cols);
    // Members by construction: integer combinations of rows.
    SparseRow combo;
    {
      std::vector<mpz_class> acc(cols);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (const auto& [c, x] : r[i]) acc[c] += x * static_cast<long>(i % 3 + 1);
      for (std::uint32_t c = 0; c < cols; ++c)
        if (acc[c] != 0) combo.emplace_back(c, acc[c]);
    }
    probes.push_back(combo);
    for (std::uint32_t c = 0; c < cols; ++c) probes.push_back({{c, mpz_class(1)}});
    for (const auto& v : probes) {
      auto extended = r;
      extended.push_back(v);
      SmithForm g = smith_normal_form(dense(extended, cols));
      bool oracle = g.rank == f.rank && product(g.invariant_factors) == product(f.invariant_factors);
      CHECK(lattice.contains(v) == oracle);
    }
    CHECK(lattice.contains(combo));
  }
}

TEST_CASE("ambient abelianizations are Z x Z") {
  for (GroupFamily g : {GroupFamily::GVB, GroupFamily::SG})
    for (int n = 3; n <= 6; ++n) {
      AbelianInvariants a = abelian_invariants(catalog(g, n));
      CHECK(a.free_rank == 2);
      CHECK(a.torsion.empty());
    }
  // S_n^ab = Z/2.
  AbelianInvariants s = abelian_invariants(catalog(GroupFamily::S, 4));
  CHECK(s.free_rank == 0);
  CHECK(s.torsion == std::vector<mpz_class>{2});
}

TEST_CASE("image rank of a column subset") {
  // x0 + x1 = 0, 2 x2 = 0: <x0, x1> has rank 1, <x2> rank 0.
  RelationMatrix m{{A(0, 0, 1), A(0, 0, 2), A(0, 0, 3)}, {{{0, 1}, {1, 1}}, {{2, 2}}}};
  CHECK(image_rank(m, {A(0, 0, 1), A(0, 0, 2)}) == 1);
  CHECK(image_rank(m, {A(0, 0, 3)}) == 0);
  CHECK(image_rank(m, {A(0, 0, 1)}) == 1);
}

TEST_CASE("perfectness on the interior at M = 6") {
  for (int n : {5, 6}) {
    CHECK(perfectness_window_check(GroupFamily::GVB, n, 6).perfect_on_interior());
    CHECK(perfectness_window_check(GroupFamily::SG, n, 6).perfect_on_interior());
  }
  PerfectnessVerdict sg3 = perfectness_window_check(GroupFamily::SG, 3, 6);
  CHECK_FALSE(sg3.perfect_on_interior());
  CHECK(sg3.interior_image_rank >= 18);
  CHECK_FALSE(perfectness_window_check(GroupFamily::SG, 4, 6).perfect_on_interior());
  CHECK_FALSE(perfectness_window_check(GroupFamily::GVB, 3, 6).perfect_on_interior());
}

TEST_CASE("perfectness verdicts are monotone in the window") {
  for (GroupFamily g : {GroupFamily::GVB, GroupFamily::SG}) {
    std::set<Generator> forced_before;
    for (std::int64_t M = 4; M <= 6; ++M) {
      PerfectnessVerdict v = perfectness_window_check(g, 5, M);
      std::set<Generator> not_forced(v.not_forced.begin(), v.not_forced.end());
      for (const auto& gen : forced_before) CHECK_FALSE(not_forced.count(gen));
      for (const auto& gen : v.interior)
        if (!not_forced.count(gen)) forced_before.insert(gen);
    }
  }
}
