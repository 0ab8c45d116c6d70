#include "schreier/snf.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace schreier {

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

using Pos = std::pair<std::size_t, std::size_t>;

class Reducer {
 public:
  Reducer(const IntegerMatrix& a, Execution exec)
      : d_(a),
        u_(IntegerMatrix::identity(a.rows())),
        v_(IntegerMatrix::identity(a.cols())),
        parallel_(exec == Execution::parallel) {}

  SmithForm run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    std::size_t t = 0;
    for (; t < steps; ++t) {
      auto p = smallest(t, t, d_.rows(), t, d_.cols());
      if (!p) break;
      move_to(*p, t);
      settle(t);
      if (d_(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(d_(i, i));
    out.diagonal = std::move(d_);
    out.left = std::move(u_);
    out.right = std::move(v_);
    return out;
  }

 private:
  // Smallest nonzero |entry| in rows [r0, r1) x cols [c0, c1), ties to the
  // lowest (row, col).
  std::optional<Pos> smallest(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t,
                              std::size_t c1) const {
    std::optional<Pos> best;
    mpz_class best_abs;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        const mpz_class& x = d_(i, j);
        if (x == 0) continue;
        if (!best || cmpabs(x, best_abs) < 0) {
          best = Pos{i, j};
          best_abs = abs(x);
        }
      }
    return best;
  }

  void move_to(Pos p, std::size_t t) {
    if (p.first != t) {
      d_.swap_rows(p.first, t);
      u_.swap_rows(p.first, t);
    }
    if (p.second != t) {
      d_.swap_cols(p.second, t);
      v_.swap_cols(p.second, t);
    }
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(t, j) = -d_(t, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = -u_(t, j);
  }

  // row_i -= q_i * row_t for every i > t, q_i = floor(D[i][t] / D[t][t]).
  void clear_column(std::size_t t) {
    const std::int64_t rows = static_cast<std::int64_t>(d_.rows());
    auto work = [&](std::int64_t ii) {
      std::size_t i = static_cast<std::size_t>(ii);
      if (d_(i, t) == 0) return;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
      if (q == 0) return;
      for (std::size_t j = t; j < d_.cols(); ++j)
        if (d_(t, j) != 0) d_(i, j) -= q * d_(t, j);
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (u_(t, j) != 0) u_(i, j) -= q * u_(t, j);
    };
    if (parallel_) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = static_cast<std::int64_t>(t) + 1; i < rows; ++i) work(i);
    } else {
      for (std::int64_t i = static_cast<std::int64_t>(t) + 1; i < rows; ++i) work(i);
    }
  }

  // col_j -= q_j * col_t for every j > t.
  void clear_row(std::size_t t) {
    const std::int64_t cols = static_cast<std::int64_t>(d_.cols());
    auto work = [&](std::int64_t jj) {
      std::size_t j = static_cast<std::size_t>(jj);
      if (d_(t, j) == 0) return;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
      if (q == 0) return;
      for (std::size_t i = t; i < d_.rows(); ++i)
        if (d_(i, t) != 0) d_(i, j) -= q * d_(i, t);
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (v_(i, t) != 0) v_(i, j) -= q * v_(i, t);
    };
    if (parallel_) {
#pragma omp parallel for schedule(static)
      for (std::int64_t j = static_cast<std::int64_t>(t) + 1; j < cols; ++j) work(j);
    } else {
      for (std::int64_t j = static_cast<std::int64_t>(t) + 1; j < cols; ++j) work(j);
    }
  }

  void settle(std::size_t t) {
    while (true) {
      clear_column(t);
      if (auto p = smallest(t + 1, t, d_.rows(), 0, t + 1)) {
        if (cmpabs(d_(p->first, t), d_(t, t)) < 0) {
          move_to(*p, t);
          continue;
        }
      }
      clear_row(t);
      if (auto p = smallest(t, t + 1, t + 1, 0, d_.cols())) {
        if (cmpabs(d_(t, p->second), d_(t, t)) < 0) {
          move_to(*p, t);
          continue;
        }
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < d_.rows() && column_clear; ++i)
        column_clear = d_(i, t) == 0;
      bool row_clear = true;
      for (std::size_t j = t + 1; j < d_.cols() && row_clear; ++j) row_clear = d_(t, j) == 0;
      if (!column_clear || !row_clear) continue;
      // Divisibility: fold a row with an entry the pivot does not divide.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < d_.rows() && !bad; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (d_(i, j) != 0 && !mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (!bad) return;
      for (std::size_t j = t; j < d_.cols(); ++j) d_(t, j) += d_(*bad, j);
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) += u_(*bad, j);
    }
  }

  IntegerMatrix d_, u_, v_;
  bool parallel_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a, Execution exec) {
  return Reducer(a, exec).run();
}

}  // namespace schreier
