#include "schreier/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "schreier/error.hpp"

namespace schreier {

namespace {

using E = AffineExpr;

const E i = E::var("i");
const E j = E::var("j");

LetterTemplate S(const E& e, std::int64_t exp = 1) { return {kSigma, {e}, exp}; }
LetterTemplate R(const E& e, std::int64_t exp = 1) { return {kRho, {e}, exp}; }

}  // namespace

std::string to_string(GroupFamily g) {
  switch (g) {
    case GroupFamily::B: return "B";
    case GroupFamily::S: return "S";
    case GroupFamily::VB: return "VB";
    case GroupFamily::WB: return "WB";
    case GroupFamily::GVB: return "GVB";
    case GroupFamily::SG: return "SG";
    case GroupFamily::UB: return "UB";
  }
  return "?";
}

GroupFamily parse_group_family(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (GroupFamily g : all_group_families())
    if (to_string(g) == up) return g;
  throw ValidationError("unknown group family '" + std::string(name) + "'");
}

const std::vector<GroupFamily>& all_group_families() {
  static const std::vector<GroupFamily> all = {
      GroupFamily::B,   GroupFamily::S,  GroupFamily::VB, GroupFamily::WB,
      GroupFamily::GVB, GroupFamily::SG, GroupFamily::UB};
  return all;
}

AlphabetPtr ambient_alphabet(GroupFamily g, std::int64_t n) {
  auto a = std::make_shared<Alphabet>();
  a->declare({kSigma, {IndexRange::between(1, n - 1)}});
  if (g != GroupFamily::B && g != GroupFamily::S)
    a->declare({kRho, {IndexRange::between(1, n - 1)}});
  return a;
}

namespace relators {

RelatorSchema sigma_far_commute(const AlphabetPtr& a) {
  return {"sigma-far-commute", {"i", "j"},
          {S(i), S(j), S(i, -1), S(j, -1)}, {far_apart("i", "j")}, a};
}
RelatorSchema rho_far_commute(const AlphabetPtr& a) {
  return {"rho-far-commute", {"i", "j"},
          {R(i), R(j), R(i, -1), R(j, -1)}, {far_apart("i", "j")}, a};
}
RelatorSchema mixed_far_commute(const AlphabetPtr& a) {
  return {"mixed-far-commute", {"i", "j"},
          {S(i), R(j), S(i, -1), R(j, -1)}, {far_apart("i", "j")}, a};
}
RelatorSchema sigma_braid(const AlphabetPtr& a) {
  return {"sigma-braid", {"i"},
          {S(i), S(i + 1), S(i), S(i + 1, -1), S(i, -1), S(i + 1, -1)}, {}, a};
}
RelatorSchema rho_braid(const AlphabetPtr& a) {
  return {"rho-braid", {"i"},
          {R(i), R(i + 1), R(i), R(i + 1, -1), R(i, -1), R(i + 1, -1)}, {}, a};
}
RelatorSchema rho_sigma_sigma(const AlphabetPtr& a) {
  return {"rho-sigma-sigma", {"i"},
          {R(i), S(i + 1), S(i), R(i + 1, -1), S(i, -1), S(i + 1, -1)}, {}, a};
}
RelatorSchema rho_sigma_sigma_shift(const AlphabetPtr& a) {
  return {"rho-sigma-sigma-shift", {"i"},
          {R(i + 1), S(i), S(i + 1), R(i, -1), S(i + 1, -1), S(i, -1)}, {}, a};
}
RelatorSchema sigma_rho_commute(const AlphabetPtr& a) {
  return {"sigma-rho-commute", {"i"}, {S(i), R(i), S(i, -1), R(i, -1)}, {}, a};
}
RelatorSchema sigma_square(const AlphabetPtr& a) {
  return {"sigma-square", {"i"}, {S(i, 2)}, {}, a};
}
RelatorSchema rho_kill(const AlphabetPtr& a) {
  return {"rho-kill", {"i"}, {R(i)}, {}, a};
}
RelatorSchema forbidden(const AlphabetPtr& a) {
  return {"forbidden", {"i"},
          {S(i), R(i + 1), R(i), S(i + 1, -1), R(i, -1), R(i + 1, -1)}, {}, a};
}

}  // namespace relators

PresentationSchema catalog(GroupFamily g, std::int64_t n) {
  if (n < 3)
    throw ValidationError("catalog(" + to_string(g) + ", " + std::to_string(n) +
                          "): at least 3 strands are required");
  AlphabetPtr a = ambient_alphabet(g, n);
  namespace r = relators;
  std::vector<RelatorSchema> rels;
  switch (g) {
    case GroupFamily::B:
      rels = {r::sigma_far_commute(a), r::sigma_braid(a)};
      break;
    case GroupFamily::S:
      rels = {r::sigma_square(a), r::sigma_far_commute(a), r::sigma_braid(a)};
      break;
    case GroupFamily::VB:
      rels = {r::sigma_square(a),       r::sigma_far_commute(a),
              r::sigma_braid(a),        r::rho_far_commute(a),
              r::rho_braid(a),          r::mixed_far_commute(a),
              r::rho_sigma_sigma_shift(a)};
      break;
    case GroupFamily::WB:
      rels = {r::sigma_square(a),       r::sigma_far_commute(a),
              r::sigma_braid(a),        r::rho_far_commute(a),
              r::rho_braid(a),          r::mixed_far_commute(a),
              r::rho_sigma_sigma_shift(a), r::forbidden(a)};
      break;
    case GroupFamily::GVB:
      rels = {r::sigma_far_commute(a), r::rho_far_commute(a),
              r::mixed_far_commute(a), r::sigma_braid(a),
              r::rho_braid(a),         r::rho_sigma_sigma(a),
              r::rho_sigma_sigma_shift(a)};
      break;
    case GroupFamily::SG:
      rels = {r::sigma_far_commute(a), r::rho_far_commute(a),
              r::mixed_far_commute(a), r::sigma_braid(a),
              r::rho_sigma_sigma(a),   r::rho_sigma_sigma_shift(a),
              r::sigma_rho_commute(a)};
      break;
    case GroupFamily::UB:
      rels = {r::sigma_far_commute(a), r::rho_far_commute(a),
              r::mixed_far_commute(a), r::sigma_braid(a)};
      break;
  }
  return {to_string(g), n, a, std::move(rels)};
}

}  // namespace schreier
