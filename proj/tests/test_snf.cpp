#include "catch_amalgamated.hpp"

#include <random>

#include "schreier/abelian.hpp"
#include "schreier/snf.hpp"

using namespace schreier;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound,
                            double density = 1.0) {
  std::uniform_int_distribution<int> v(-bound, bound);
  std::bernoulli_distribution keep(density);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = v(rng);
  return m;
}

// gcd of all k x k minors.
mpz_class determinantal_divisor(const IntegerMatrix& a, std::size_t k) {
  mpz_class g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  auto next = [](std::vector<std::size_t>& c, std::size_t n) {
    for (std::size_t i = c.size(); i-- > 0;)
      if (c[i] < n - c.size() + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < c.size(); ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      IntegerMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
      mpz_class d = sub.determinant();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (next(cols, a.cols()));
  } while (next(rows, a.rows()));
  return g;
}

std::vector<mpz_class> oracle_invariant_factors(const IntegerMatrix& a) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    mpz_class d = determinantal_divisor(a, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

void check_form(const IntegerMatrix& a, const SmithForm& f) {
  CHECK(f.left * a * f.right == f.diagonal);
  CHECK(f.diagonal.is_diagonal());
  mpz_class du = f.left.determinant(), dv = f.right.determinant();
  CHECK(abs(du) == 1);
  CHECK(abs(dv) == 1);
  REQUIRE(f.invariant_factors.size() == f.rank);
  for (std::size_t i = 0; i < f.rank; ++i) {
    CHECK(f.invariant_factors[i] > 0);
    CHECK(f.diagonal(i, i) == f.invariant_factors[i]);
    if (i + 1 < f.rank)
      CHECK(mpz_divisible_p(f.invariant_factors[i + 1].get_mpz_t(),
                            f.invariant_factors[i].get_mpz_t()));
  }
}

}  // namespace

TEST_CASE("small examples") {
  SmithForm id = smith_normal_form(IntegerMatrix::identity(2));
  CHECK(id.invariant_factors == std::vector<mpz_class>{1, 1});
  CHECK(invariants_of(id, 2).free_rank == 0);

  SmithForm d = smith_normal_form(IntegerMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(d.invariant_factors == std::vector<mpz_class>{1, 6});
  check_form(IntegerMatrix::from_rows({{2, 0}, {0, 3}}), d);

  SmithForm z = smith_normal_form(IntegerMatrix(3, 4));
  CHECK(z.rank == 0);
  CHECK(invariants_of(z, 4).free_rank == 4);
  CHECK(z.diagonal == IntegerMatrix(3, 4));
}

TEST_CASE("invariant factors agree with determinantal divisors") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntegerMatrix a = random_matrix(rng, r, c, 6, trial % 3 ? 1.0 : 0.5);
    SmithForm f = smith_normal_form(a);
    CHECK(f.invariant_factors == oracle_invariant_factors(a));
  }
}

TEST_CASE("random matrices: U A V = D, unimodular transforms, divisibility") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    IntegerMatrix a = random_matrix(rng, dim(rng), dim(rng), 9);
    check_form(a, smith_normal_form(a, Execution::serial));
  }
}

TEST_CASE("serial and parallel paths agree exactly") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    IntegerMatrix a = random_matrix(rng, 12, 10, 5, 0.4);
    SmithForm s = smith_normal_form(a, Execution::serial);
    SmithForm p = smith_normal_form(a, Execution::parallel);
    CHECK(s.diagonal == p.diagonal);
    CHECK(s.left == p.left);
    CHECK(s.right == p.right);
  }
}

TEST_CASE("large entries stay exact") {
  IntegerMatrix a(2, 2);
  a(0, 0) = mpz_class("123456789012345678901234567890");
  a(1, 1) = mpz_class("987654321098765432109876543210");
  SmithForm f = smith_normal_form(a);
  check_form(a, f);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a(0, 0).get_mpz_t(), a(1, 1).get_mpz_t());
  CHECK(f.invariant_factors[0] == g);
  CHECK(f.invariant_factors[1] == a(0, 0) * a(1, 1) / g);
}
