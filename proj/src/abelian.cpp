#include "schreier/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "schreier/derived.hpp"
#include "schreier/error.hpp"

namespace schreier {

namespace {

mpz_class entry(const SparseRow& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return 0;
}

// a - f * b
SparseRow axpy(const SparseRow& a, const mpz_class& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, -f * j->second);
      ++j;
    } else {
      mpz_class v = i->second - f * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::uint32_t RelationMatrix::column_of(const Generator& g) const {
  auto it = std::lower_bound(columns.begin(), columns.end(), g);
  if (it == columns.end() || *it != g)
    throw ValidationError("generator " + to_string(g) + " is not a column");
  return static_cast<std::uint32_t>(it - columns.begin());
}

IntegerMatrix RelationMatrix::dense() const {
  IntegerMatrix m(rows.size(), columns.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) m(i, c) = v;
  return m;
}

std::string RelationMatrix::to_text() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    std::size_t next = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) os << ' ';
      if (next < r.size() && r[next].first == c)
        os << r[next++].second;
      else
        os << 0;
    }
    os << '\n';
  }
  return os.str();
}

SparseRow exponent_sums(const Word& w, const std::vector<Generator>& columns) {
  std::map<std::uint32_t, mpz_class> acc;
  for (const auto& l : w.runs()) {
    auto it = std::lower_bound(columns.begin(), columns.end(), l.gen);
    if (it == columns.end() || *it != l.gen)
      throw ValidationError("generator " + to_string(l.gen) + " is not a column");
    acc[static_cast<std::uint32_t>(it - columns.begin())] += l.exp;
  }
  SparseRow out;
  for (auto& [c, v] : acc)
    if (v != 0) out.emplace_back(c, std::move(v));
  return out;
}

RelationMatrix relation_matrix(const TruncatedPresentation& p) {
  RelationMatrix m;
  m.columns.assign(p.generators().begin(), p.generators().end());
  for (const auto& w : p.relator_words()) m.rows.push_back(exponent_sums(w, m.columns));
  return m;
}

RelationMatrix relation_matrix(const PresentationSchema& finite) {
  for (const auto& f : finite.alphabet->families())
    for (const auto& d : f.domain)
      if (!d.lo || !d.hi)
        throw ValidationError("presentation " + finite.name + " has an unbounded family");
  return relation_matrix(TruncatedPresentation::truncate(finite.relators, finite.alphabet, 0, 0));
}

std::string to_string(const AbelianInvariants& a) {
  std::string s = "Z^" + std::to_string(a.free_rank);
  for (const auto& t : a.torsion) s += " + Z/" + t.get_str();
  return s;
}

AbelianInvariants invariants_of(const SmithForm& f, std::size_t columns) {
  AbelianInvariants out;
  out.free_rank = columns - f.rank;
  for (const auto& d : f.invariant_factors)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

LatticeReducer::LatticeReducer(std::size_t columns, std::vector<SparseRow> rows, Execution exec)
    : columns_(columns) {
  std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
  std::vector<std::vector<std::uint32_t>> occupied(columns);  // may hold stale row ids
  for (std::uint32_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) occupied[e.first].push_back(i);
  std::vector<char> used(rows.size(), 0);
  std::vector<char> pivot_column(columns, 0);

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r].empty()) continue;
      std::optional<std::uint32_t> best;
      for (const auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) &&
            (!best || occupied[c].size() < occupied[*best].size()))
          best = c;
      if (!best) continue;
      const std::uint32_t c = *best;
      used[r] = 1;
      pivot_column[c] = 1;
      progress = true;
      const SparseRow& pr = rows[r];
      const mpz_class sign = entry(pr, c);

      std::vector<std::uint32_t> targets;
      std::sort(occupied[c].begin(), occupied[c].end());
      occupied[c].erase(std::unique(occupied[c].begin(), occupied[c].end()), occupied[c].end());
      for (auto j : occupied[c])
        if (j != r && !used[j]) targets.push_back(j);
      std::vector<SparseRow> updated(targets.size());
      auto work = [&](std::int64_t t) {
        const SparseRow& row = rows[targets[t]];
        mpz_class x = entry(row, c);
        updated[t] = x == 0 ? row : axpy(row, x * sign, pr);
      };
      const auto count = static_cast<std::int64_t>(targets.size());
      if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t t = 0; t < count; ++t) work(t);
      } else {
        for (std::int64_t t = 0; t < count; ++t) work(t);
      }
      for (std::size_t t = 0; t < targets.size(); ++t) {
        rows[targets[t]] = std::move(updated[t]);
        for (const auto& e : rows[targets[t]]) occupied[e.first].push_back(targets[t]);
      }
      pivots_.push_back({c, rows[r]});
    }
  }

  residual_index_.assign(columns, -1);
  for (std::uint32_t c = 0; c < columns; ++c)
    if (!pivot_column[c]) {
      residual_index_[c] = static_cast<std::int64_t>(residual_columns_.size());
      residual_columns_.push_back(c);
    }
  std::vector<std::uint32_t> rest;
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    if (!used[r] && !rows[r].empty()) rest.push_back(r);
  IntegerMatrix dense(rest.size(), residual_columns_.size());
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (const auto& [c, v] : rows[rest[i]]) {
      // Pivot columns were cleared from every unused row.
      dense(i, static_cast<std::size_t>(residual_index_[c])) = v;
    }
  residual_ = smith_normal_form(dense, exec);
}

AbelianInvariants LatticeReducer::invariants() const {
  return invariants_of(residual_, residual_columns_.size());
}

bool LatticeReducer::contains(SparseRow v) const {
  // Pivot k has zeros in the columns of pivots 0..k-1, so clearing in order
  // never reintroduces an earlier pivot column.
  for (const auto& p : pivots_) {
    mpz_class x = entry(v, p.column);
    if (x == 0) continue;
    v = axpy(v, x * entry(p.row, p.column), p.row);
  }
  const IntegerMatrix& V = residual_.right;
  const std::size_t k = residual_columns_.size();
  std::vector<mpz_class> y(k);
  for (const auto& [c, x] : v) {
    auto pos = static_cast<std::size_t>(residual_index_[c]);
    for (std::size_t j = 0; j < k; ++j)
      if (V(pos, j) != 0) y[j] += x * V(pos, j);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (j < residual_.rank) {
      if (!mpz_divisible_p(y[j].get_mpz_t(), residual_.invariant_factors[j].get_mpz_t()))
        return false;
    } else if (y[j] != 0) {
      return false;
    }
  }
  return true;
}

bool LatticeReducer::column_in_lattice(std::uint32_t column) const {
  return contains({{column, mpz_class(1)}});
}

AbelianInvariants abelian_invariants(const TruncatedPresentation& p, Execution exec) {
  RelationMatrix m = relation_matrix(p);
  return LatticeReducer(m.columns.size(), std::move(m.rows), exec).invariants();
}

AbelianInvariants abelian_invariants(const PresentationSchema& finite, Execution exec) {
  RelationMatrix m = relation_matrix(finite);
  return LatticeReducer(m.columns.size(), std::move(m.rows), exec).invariants();
}

std::size_t image_rank(const RelationMatrix& m, const std::vector<Generator>& subset,
                       Execution exec) {
  std::vector<char> in_subset(m.columns.size(), 0);
  for (const auto& g : subset) in_subset[m.column_of(g)] = 1;
  std::vector<std::uint32_t> renumber(m.columns.size());
  std::uint32_t kept = 0;
  for (std::uint32_t c = 0; c < m.columns.size(); ++c)
    if (!in_subset[c]) renumber[c] = kept++;
  std::vector<SparseRow> without;
  without.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    SparseRow out;
    for (const auto& [c, v] : r)
      if (!in_subset[c]) out.emplace_back(renumber[c], v);
    without.push_back(std::move(out));
  }
  std::size_t full = LatticeReducer(m.columns.size(), m.rows, exec).rank();
  std::size_t rest = LatticeReducer(kept, std::move(without), exec).rank();
  return subset.size() - (full - rest);
}

PerfectnessVerdict perfectness_window_check(GroupFamily g, std::int64_t n, std::int64_t window,
                                            Execution exec) {
  if (g != GroupFamily::GVB && g != GroupFamily::SG)
    throw ValidationError("perfectness check applies to GVB and SG only");
  if (n < 3) throw ValidationError("perfectness check needs n >= 3");
  TruncatedPresentation p = TruncatedPresentation::truncate(simplified_relators(g, n),
                                                            simplified_alphabet(g, n), window);
  RelationMatrix m = relation_matrix(p);
  PerfectnessVerdict v{g, n, window, m.columns.size(), m.rows.size(), p.interior_generators(),
                       {}, 0};
  LatticeReducer lattice(m.columns.size(), m.rows, exec);
  for (const auto& gen : v.interior)
    if (!lattice.column_in_lattice(m.column_of(gen))) v.not_forced.push_back(gen);
  v.interior_image_rank = image_rank(m, v.interior, exec);
  return v;
}

}  // namespace schreier
