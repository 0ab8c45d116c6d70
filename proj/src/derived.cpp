#include "schreier/derived.hpp"

#include "schreier/error.hpp"
#include "schreier/rewriting.hpp"
#include "schreier/scripts.hpp"

namespace schreier {

namespace {

using E = AffineExpr;

const E m = E::var("m");
const E k = E::var("k");
const E i = E::var("i");
const E j = E::var("j");

LetterTemplate A(const E& a, const E& b, const E& c, std::int64_t e = 1) {
  return {kAlpha, {a, b, c}, e};
}
LetterTemplate B(const E& a, const E& b, const E& c, std::int64_t e = 1) {
  return {kBeta, {a, b, c}, e};
}
LetterTemplate AJ(const E& a, std::int64_t e = 1) { return {kAlphaStrand, {a}, e}; }
LetterTemplate BJ(const E& a, const E& b, std::int64_t e = 1) {
  return {kBetaStrand, {a, b}, e};
}

void require_derivable(GroupFamily g, std::int64_t n) {
  if (g != GroupFamily::GVB && g != GroupFamily::SG)
    throw ValidationError("no derived presentation is built for " + to_string(g));
  if (n < 3) throw ValidationError("at least 3 strands are required");
}

}  // namespace

std::optional<Generator> RenameRule::apply(const Generator& g) const {
  if (g.family != from_family || g.arity != from.size()) return std::nullopt;
  Bindings b;
  for (std::size_t p = 0; p < from.size(); ++p) {
    if (from[p].constant) {
      if (g.idx[p] != *from[p].constant) return std::nullopt;
    } else {
      b.emplace_back(from[p].variable, g.idx[p]);
    }
  }
  const std::int64_t* strand = lookup(b, "j");
  if (strand && !variable_range.contains(*strand)) return std::nullopt;
  std::vector<std::int64_t> idx;
  for (const auto& v : to) idx.push_back(*lookup(b, v));
  return Generator(to_family, std::span<const std::int64_t>(idx));
}

std::optional<Generator> RenameRule::unapply(const Generator& g) const {
  if (g.family != to_family || g.arity != to.size()) return std::nullopt;
  Bindings b;
  for (std::size_t p = 0; p < to.size(); ++p) b.emplace_back(to[p], g.idx[p]);
  std::vector<std::int64_t> idx;
  for (const auto& s : from) idx.push_back(s.constant ? *s.constant : *lookup(b, s.variable));
  return Generator(from_family, std::span<const std::int64_t>(idx));
}

std::string RenameRule::to_string() const {
  std::string lhs = from_family + "[";
  for (std::size_t p = 0; p < from.size(); ++p) {
    if (p) lhs += ",";
    lhs += from[p].constant ? std::to_string(*from[p].constant) : from[p].variable;
  }
  std::string rhs = to_family + "[";
  for (std::size_t p = 0; p < to.size(); ++p) rhs += (p ? "," : "") + to[p];
  return lhs + "] -> " + rhs + "] (" + schreier::to_string(variable_range) + ")";
}

const std::vector<RenameRule>& strand_renamings() {
  static const std::vector<RenameRule> rules = {
      {kAlpha, {{0, ""}, {0, ""}, {std::nullopt, "j"}}, kAlphaStrand, {"j"}, {3, std::nullopt}},
      {kBeta, {{std::nullopt, "m"}, {0, ""}, {std::nullopt, "j"}}, kBetaStrand, {"m", "j"}, {3, std::nullopt}},
  };
  return rules;
}

Generator unrename(const Generator& g) {
  for (const auto& r : strand_renamings())
    if (auto back = r.unapply(g)) return *back;
  return g;
}

Word unrename(const Word& w) {
  Word out;
  for (const auto& r : w.runs()) out.push_back(unrename(r.gen), r.exp);
  return out;
}

AlphabetPtr simplified_alphabet(GroupFamily g, std::int64_t n) {
  require_derivable(g, n);
  auto a = std::make_shared<Alphabet>();
  std::int64_t lowest = g == GroupFamily::GVB ? 1 : 2;
  a->declare({kAlpha, {IndexRange::all(), IndexRange::all(), IndexRange::between(lowest, 2)}});
  a->declare({kBeta, {IndexRange::all(), IndexRange::all(), IndexRange::between(2, 2)}});
  a->declare({kAlphaStrand, {IndexRange::between(3, n - 1)}});
  a->declare({kBetaStrand, {IndexRange::all(), IndexRange::between(3, n - 1)}});
  return a;
}

AlphabetPtr combined_alphabet(std::int64_t n) {
  auto a = std::make_shared<Alphabet>(*rewritten_alphabet(n));
  a->declare({kAlphaStrand, {IndexRange::between(3, n - 1)}});
  a->declare({kBetaStrand, {IndexRange::all(), IndexRange::between(3, n - 1)}});
  return a;
}

std::vector<RelatorSchema> raw_derived(GroupFamily g, std::int64_t n) {
  require_derivable(g, n);
  AlphabetPtr target = rewritten_alphabet(n);
  std::vector<RelatorSchema> out = trivial_pair_schemas(target);
  for (const auto& r : catalog(g, n).relators)
    out.push_back(rewrite_relator_schema(r, target));
  return out;
}

std::vector<RelatorSchema> transcribed_raw_relators(GroupFamily g, std::int64_t n) {
  require_derivable(g, n);
  AlphabetPtr a = rewritten_alphabet(n);
  std::vector<RelatorSchema> out = {
      {"alpha-trivial", {"m"}, {A(m, 0, 1)}, {}, a},
      {"beta-trivial", {"m", "k"}, {B(m, k, 1)}, {}, a},
      {"sigma-far-commute", {"m", "k", "i", "j"},
       {A(m, k, i), A(m + 1, k, j), A(m + 1, k, i, -1), A(m, k, j, -1)},
       {far_apart("i", "j")}, a},
      {"rho-far-commute", {"m", "k", "i", "j"},
       {B(m, k, i), B(m, k + 1, j), B(m, k + 1, i, -1), B(m, k, j, -1)},
       {far_apart("i", "j")}, a},
      {"mixed-far-commute", {"m", "k", "i", "j"},
       {A(m, k, i), B(m + 1, k, j), A(m, k + 1, i, -1), B(m, k, j, -1)},
       {far_apart("i", "j")}, a},
      {"sigma-braid", {"m", "k", "i"},
       {A(m, k, i), A(m + 1, k, i + 1), A(m + 2, k, i), A(m + 2, k, i + 1, -1),
        A(m + 1, k, i, -1), A(m, k, i + 1, -1)},
       {}, a},
  };
  if (g == GroupFamily::GVB)
    out.push_back({"rho-braid", {"m", "k", "i"},
                   {B(m, k, i), B(m, k + 1, i + 1), B(m, k + 2, i), B(m, k + 2, i + 1, -1),
                    B(m, k + 1, i, -1), B(m, k, i + 1, -1)},
                   {}, a});
  out.push_back({"rho-sigma-sigma", {"m", "k", "i"},
                 {B(m, k, i), A(m, k + 1, i + 1), A(m + 1, k + 1, i), B(m + 2, k, i + 1, -1),
                  A(m + 1, k, i, -1), A(m, k, i + 1, -1)},
                 {}, a});
  out.push_back({"rho-sigma-sigma-shift", {"m", "k", "i"},
                 {B(m, k, i + 1), A(m, k + 1, i), A(m + 1, k + 1, i + 1), B(m + 2, k, i, -1),
                  A(m + 1, k, i + 1, -1), A(m, k, i, -1)},
                 {}, a});
  if (g == GroupFamily::SG)
    out.push_back({"sigma-rho-commute", {"m", "k", "i"},
                   {A(m, k, i), B(m + 1, k, i), A(m, k + 1, i, -1), B(m, k, i, -1)}, {}, a});
  return out;
}

std::vector<RelatorSchema> simplified_relators(GroupFamily g, std::int64_t n) {
  AlphabetPtr a = simplified_alphabet(g, n);
  const Guard j3 = at_least(j, 3), j4 = at_least(j, 4), i3 = at_least(i, 3),
              i4 = at_least(i, 4), far = far_apart("i", "j");
  const std::vector<std::string> mk = {"m", "k"}, mkj = {"m", "k", "j"},
                                 mki = {"m", "k", "i"}, mij = {"m", "i", "j"},
                                 mj = {"m", "j"}, mi = {"m", "i"}, ij = {"i", "j"},
                                 ii = {"i"};
  // Relators common to both lists.
  RelatorSchema alpha2_alphaj("alpha2-alphaj", mkj,
                              {A(m, k, 2), AJ(j), A(m + 1, k, 2, -1), AJ(j, -1)}, {j4}, a);
  RelatorSchema alphaj_commute("alphaj-commute", ij, {AJ(i), AJ(j), AJ(i, -1), AJ(j, -1)},
                               {far}, a);
  RelatorSchema beta2_betaj("beta2-betaj", mkj,
                            {B(m, k, 2), BJ(m, j), B(m, k + 1, 2, -1), BJ(m, j, -1)}, {j4}, a);
  RelatorSchema betaj_commute("betaj-commute", mij,
                              {BJ(m, i), BJ(m, j), BJ(m, i, -1), BJ(m, j, -1)}, {far}, a);
  RelatorSchema alpha2_betaj("alpha2-betaj", mkj,
                             {A(m, k, 2), BJ(m + 1, j), A(m, k + 1, 2, -1), BJ(m, j, -1)},
                             {j4}, a);
  RelatorSchema alphaj_beta2("alphaj-beta2", {"m", "k", "i"},
                             {AJ(i), B(m + 1, k, 2), AJ(i, -1), B(m, k, 2, -1)}, {i4}, a);
  RelatorSchema alphaj_betaj("alphaj-betaj", mij,
                             {AJ(i), BJ(m + 1, j), AJ(i, -1), BJ(m, j, -1)}, {far}, a);
  RelatorSchema alpha23_braid("alpha23-braid", mk,
                              {A(m, k, 2), AJ(3), A(m + 2, k, 2), AJ(3, -1), A(m + 1, k, 2, -1),
                               AJ(3, -1)},
                              {}, a);
  RelatorSchema alphaj_braid("alphaj-braid", ii,
                             {AJ(i), AJ(i + 1), AJ(i), AJ(i + 1, -1), AJ(i, -1), AJ(i + 1, -1)},
                             {i3}, a);
  RelatorSchema beta2_alpha3("beta2-alpha3-mixed", mk,
                             {B(m, k, 2), AJ(3), A(m + 1, k + 1, 2), BJ(m + 2, 3, -1),
                              A(m + 1, k, 2, -1), AJ(3, -1)},
                             {}, a);
  RelatorSchema betaj_alphaj_mixed("betaj-alphaj-mixed", mi,
                                   {BJ(m, i), AJ(i + 1), AJ(i), BJ(m + 2, i + 1, -1), AJ(i, -1),
                                    AJ(i + 1, -1)},
                                   {i3}, a);
  RelatorSchema beta3_alpha2("beta3-alpha2-mixed", mk,
                             {BJ(m, 3), A(m, k + 1, 2), AJ(3), B(m + 2, k, 2, -1), AJ(3, -1),
                              A(m, k, 2, -1)},
                             {}, a);
  RelatorSchema betaj_alphaj_shift("betaj-alphaj-shift", mi,
                                   {BJ(m, i + 1), AJ(i), AJ(i + 1), BJ(m + 2, i, -1),
                                    AJ(i + 1, -1), AJ(i, -1)},
                                   {i3}, a);

  if (g == GroupFamily::GVB) {
    return {
        {"alpha1-trivial", {"m"}, {A(m, 0, 1)}, {}, a},
        {"alpha1-alphaj", mkj, {A(m, k, 1), AJ(j), A(m + 1, k, 1, -1), AJ(j, -1)}, {j3}, a},
        alpha2_alphaj,
        alphaj_commute,
        beta2_betaj,
        betaj_commute,
        {"alpha1-betaj", mkj, {A(m, k, 1), BJ(m + 1, j), A(m, k + 1, 1, -1), BJ(m, j, -1)},
         {j3}, a},
        alpha2_betaj,
        alphaj_beta2,
        alphaj_betaj,
        {"alpha12-braid", mk,
         {A(m, k, 1), A(m + 1, k, 2), A(m + 2, k, 1), A(m + 2, k, 2, -1), A(m + 1, k, 1, -1),
          A(m, k, 2, -1)},
         {}, a},
        alpha23_braid,
        alphaj_braid,
        {"beta2-recurrence", mk, {B(m, k + 1, 2), B(m, k + 2, 2, -1), B(m, k, 2, -1)}, {}, a},
        {"beta23-braid", mk,
         {B(m, k, 2), BJ(m, 3), B(m, k + 2, 2), BJ(m, 3, -1), B(m, k + 1, 2, -1), BJ(m, 3, -1)},
         {}, a},
        {"betaj-braid", mi,
         {BJ(m, i), BJ(m, i + 1), BJ(m, i), BJ(m, i + 1, -1), BJ(m, i, -1), BJ(m, i + 1, -1)},
         {i3}, a},
        {"alpha-beta2-shift", mk,
         {A(m, k + 1, 2), A(m + 1, k + 1, 1), B(m + 2, k, 2, -1), A(m + 1, k, 1, -1),
          A(m, k, 2, -1)},
         {}, a},
        beta2_alpha3,
        betaj_alphaj_mixed,
        {"beta2-alpha-mixed", mk,
         {B(m, k, 2), A(m, k + 1, 1), A(m + 1, k + 1, 2), A(m + 1, k, 2, -1), A(m, k, 1, -1)},
         {}, a},
        beta3_alpha2,
        betaj_alphaj_shift,
    };
  }
  return {
      alpha2_alphaj,
      alphaj_commute,
      beta2_betaj,
      betaj_commute,
      {"betaj-shift", mj, {BJ(m + 1, j), BJ(m, j, -1)}, {j3}, a},
      alpha2_betaj,
      alphaj_beta2,
      alphaj_betaj,
      {"alpha2-recurrence", mk, {A(m + 1, k, 2), A(m + 2, k, 2, -1), A(m, k, 2, -1)}, {}, a},
      alpha23_braid,
      alphaj_braid,
      {"alpha2-beta2-shift", mk, {A(m, k + 1, 2), B(m + 2, k, 2, -1), A(m, k, 2, -1)}, {}, a},
      beta2_alpha3,
      betaj_alphaj_mixed,
      {"beta2-alpha2", mk, {B(m, k, 2), A(m + 1, k + 1, 2), A(m + 1, k, 2, -1)}, {}, a},
      beta3_alpha2,
      betaj_alphaj_shift,
      {"alpha2-beta2-commute", mk,
       {A(m, k, 2), B(m + 1, k, 2), A(m, k + 1, 2, -1), B(m, k, 2, -1)}, {}, a},
      {"alphaj-betaj-commute", mi, {AJ(i), BJ(m + 1, i), AJ(i, -1), BJ(m, i, -1)}, {}, a},
  };
}

DerivedPresentation derived_presentation(GroupFamily g, std::int64_t n) {
  require_derivable(g, n);
  DerivedPresentation d{g,
                        n,
                        catalog(g, n),
                        rewritten_alphabet(n),
                        {},
                        simplified_alphabet(g, n),
                        simplified_relators(g, n),
                        strand_renamings()};
  d.raw = raw_derived(g, n);
  return d;
}

SimplificationReport verify_simplification(GroupFamily g, std::int64_t n,
                                           std::int64_t window) {
  require_derivable(g, n);
  if (window < 3) throw ValidationError("simplification check needs a window of at least 3");
  ScriptSetup setup = setup_script(g == GroupFamily::GVB ? "gvb-simplify" : "sg-simplify",
                                   n, window);
  ReplayResult replayed = replay(setup.script, std::move(setup.input));
  TruncatedPresentation& raw = replayed.presentation;
  drop_trivial_generators(raw);

  TruncatedPresentation listed = TruncatedPresentation::truncate(
      simplified_relators(g, n), simplified_alphabet(g, n), window);
  drop_trivial_generators(listed);

  RelatorSet left = interior_relator_set(raw);
  RelatorSet right = interior_relator_set(listed);
  SetComparison cmp = compare_relator_sets(left, right);
  SimplificationReport rep;
  rep.equal = cmp.equal;
  rep.eliminated = replayed.eliminated;
  rep.skipped = replayed.skipped;
  rep.raw_interior = left.size();
  rep.simplified_interior = right.size();
  rep.only_replayed = std::move(cmp.only_left);
  rep.only_listed = std::move(cmp.only_right);
  rep.transcript = std::move(replayed.transcript);
  return rep;
}

}  // namespace schreier
