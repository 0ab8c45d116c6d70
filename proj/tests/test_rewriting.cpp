#include "catch_amalgamated.hpp"

#include <random>

#include "schreier/catalog.hpp"
#include "schreier/error.hpp"
#include "schreier/rewriting.hpp"
#include "support.hpp"

using namespace schreier;
using testing_support::unit_letters;

namespace {

Generator sigma(std::int64_t i) { return Generator(kSigma, {i}); }
Generator rho(std::int64_t i) { return Generator(kRho, {i}); }

Word rep(std::int64_t m, std::int64_t k) {
  Word w;
  if (m) w.push_back(sigma(1), m);
  if (k) w.push_back(rho(1), k);
  return w;
}

// Independent rewriting: walk unit letters, tracking the coset by exponent
// sums, and drop generators whose expansion is trivial.
Word oracle_tau(const Word& w) {
  std::int64_t m = 0, k = 0;
  std::vector<Letter> out;
  for (const auto& l : unit_letters(w)) {
    bool is_sigma = l.gen.family == kSigma;
    if (l.exp < 0) (is_sigma ? m : k) -= 1;
    std::int64_t i = l.gen[0];
    bool trivial = is_sigma ? (i == 1 && k == 0) : i == 1;
    if (!trivial) out.push_back({Generator(is_sigma ? kAlpha : kBeta, {m, k, i}), l.exp});
    if (l.exp > 0) (is_sigma ? m : k) += 1;
  }
  return Word::reduce(out);
}

Word drop_trivial(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w.runs()) {
    bool trivial = l.gen.family == kAlpha ? (l.gen[2] == 1 && l.gen[1] == 0) : l.gen[2] == 1;
    if (!trivial) out.push_back(l);
  }
  return Word::reduce(out);
}

// Random word over s1..s{n-1}, r1..r{n-1}, closed into the kernel.
Word random_kernel_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1), coin(0, 1);
  Word w;
  for (int t = 0; t < len; ++t)
    w.push_back(coin(rng) ? sigma(idx(rng)) : rho(idx(rng)), coin(rng) ? 1 : -1);
  Coset c = phi_image(w);
  w.push_back(rho(1), -c.k);
  w.push_back(sigma(1), -c.m);
  return w;
}

}  // namespace

TEST_CASE("transversal representatives and cosets") {
  for (std::int64_t m = -4; m <= 4; ++m)
    for (std::int64_t k = -4; k <= 4; ++k) {
      Word r = representative({m, k});
      CHECK(r == rep(m, k));
      Coset c = coset_of(r);
      CHECK((c.m == m && c.k == k));
    }
  CHECK(coset_of(parse_word("s3")).m == 1);
  Coset c = coset_of(parse_word("r2^-1 s1 r2"));
  CHECK((c.m == 1 && c.k == 0));
  CHECK_THROWS_AS(coset_of(parse_word("a[0,0,1]")), ValidationError);
}

TEST_CASE("Schreier generator expansions") {
  SchreierGenerator g = schreier_generator({1, 2}, sigma(3), 4);
  CHECK(g.name == Generator(kAlpha, {1, 2, 3}));
  CHECK(g.expansion == parse_word("s1 r1^2 s3 r1^-2 s1^-2"));
  CHECK(schreier_generator({0, 0}, sigma(1), 4).expansion.empty());
  CHECK(schreier_generator({0, 5}, rho(1), 4).expansion.empty());
  CHECK(expand(Word(Generator(kBeta, {0, 0, 2}))) == parse_word("r2 r1^-1"));
  CHECK_THROWS_AS(schreier_generator({0, 0}, sigma(4), 4), ValidationError);

  for (std::int64_t m = -3; m <= 3; ++m)
    for (std::int64_t k = -3; k <= 3; ++k)
      for (std::int64_t i = 1; i <= 4; ++i)
        for (const Generator& x : {sigma(i), rho(i)}) {
          SchreierGenerator s = schreier_generator({m, k}, x, 5);
          Coset target = coset_of(concat(rep(m, k), Word(x)));
          Word oracle = concat(concat(rep(m, k), Word(x)), invert(rep(target.m, target.k)));
          CHECK(s.expansion == oracle);
          Coset c = phi_image(s.expansion);
          CHECK((c.m == 0 && c.k == 0));
        }
}

TEST_CASE("trivial pairs are exactly sigma_1 at k = 0 and rho_1") {
  for (std::int64_t m = -5; m <= 5; ++m)
    for (std::int64_t k = -5; k <= 5; ++k)
      for (std::int64_t i = 1; i <= 4; ++i) {
        CHECK(is_trivial_pair({m, k}, sigma(i)) == (i == 1 && k == 0));
        CHECK(is_trivial_pair({m, k}, rho(i)) == (i == 1));
        CHECK(is_trivial_pair({m, k}, sigma(i)) ==
              schreier_generator({m, k}, sigma(i), 5).expansion.empty());
      }
}

TEST_CASE("tau follows the prefix-coset rule") {
  CHECK(tau(parse_word("s1 s1^-1")).empty());
  Word far = tau(parse_word("s1 s3 s1^-1 s3^-1"));
  CHECK(drop_trivial(far) == parse_word("a[1,0,3] a[0,0,3]^-1"));
  CHECK_THROWS_AS(tau(parse_word("s1")), NotKernelElement);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_kernel_word(rng, 5, 1 + trial % 15);
    Word t = tau(w);
    CHECK(drop_trivial(t) == oracle_tau(w));
    CHECK(freely_equal(expand(t), w));
  }
}

TEST_CASE("tau is multiplicative on kernel words") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_kernel_word(rng, 4, 6);
    Word v = random_kernel_word(rng, 4, 6);
    CHECK(drop_trivial(tau(concat(u, v))) == drop_trivial(concat(tau(u), tau(v))));
  }
}

TEST_CASE("rewritten relators expand to the conjugated relator") {
  // rewrite_relator((1,0), sigma braid at i = 1) against a hand expansion.
  Word braid = parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1");
  Word rw = rewrite_relator({1, 0}, braid);
  CHECK(freely_equal(expand(rw), conjugate(braid, rep(1, 0))));
  CHECK(drop_trivial(rw) == oracle_tau(conjugate(braid, rep(1, 0))));
  CHECK(rewrite_relator({0, 0}, parse_word("s1 s1^-1")).empty());
}

TEST_CASE("expansion identity on small catalogs, serial and parallel") {
  for (GroupFamily g : {GroupFamily::GVB, GroupFamily::SG})
    for (int n = 3; n <= 4; ++n) {
      ExpansionCheck s = check_expansion_identity(catalog(g, n), 2, Execution::serial);
      ExpansionCheck p = check_expansion_identity(catalog(g, n), 2, Execution::parallel);
      CHECK(s.ok());
      CHECK(p.ok());
      CHECK(s.checked == p.checked);
      CHECK(s.checked > 0);
    }
}
