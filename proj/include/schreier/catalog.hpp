#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/schema.hpp"

namespace schreier {

enum class GroupFamily { B, S, VB, WB, GVB, SG, UB };

std::string to_string(GroupFamily g);
GroupFamily parse_group_family(std::string_view name);  // case-insensitive
const std::vector<GroupFamily>& all_group_families();

// sigma_i (family "s") and, except for B and S, rho_i (family "r"),
// i in 1..n-1.
AlphabetPtr ambient_alphabet(GroupFamily g, std::int64_t n);

// The standard presentation on n strands; n >= 3.
PresentationSchema catalog(GroupFamily g, std::int64_t n);

// Individual ambient relator families, shared by the catalogs and the
// diagram quotients.  Names are stable identifiers.
namespace relators {
RelatorSchema sigma_far_commute(const AlphabetPtr& a);
RelatorSchema rho_far_commute(const AlphabetPtr& a);
RelatorSchema mixed_far_commute(const AlphabetPtr& a);
RelatorSchema sigma_braid(const AlphabetPtr& a);
RelatorSchema rho_braid(const AlphabetPtr& a);
// rho_i s_{i+1} s_i = s_{i+1} s_i rho_{i+1}
RelatorSchema rho_sigma_sigma(const AlphabetPtr& a);
// rho_{i+1} s_i s_{i+1} = s_i s_{i+1} rho_i
RelatorSchema rho_sigma_sigma_shift(const AlphabetPtr& a);
RelatorSchema sigma_rho_commute(const AlphabetPtr& a);
RelatorSchema sigma_square(const AlphabetPtr& a);
RelatorSchema rho_kill(const AlphabetPtr& a);
// s_i rho_{i+1} rho_i = rho_{i+1} rho_i s_{i+1}
RelatorSchema forbidden(const AlphabetPtr& a);
}  // namespace relators

}  // namespace schreier
