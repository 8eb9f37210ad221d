#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ering/carrier.hpp"

namespace ering {

/// Deliberately broken models used to show that each suite can fail.
///
/// The first four corrupt the carrier's oracles or enumerators. The last two
/// leave the carrier intact and corrupt a map that a suite checks (the
/// compression family and the Boolean homomorphism, respectively).
enum class Mutation {
  none,
  effects_not_closed,  // E = {0, 1, e0} without 1 - e0
  symmetric_cone,      // E+ oracle also accepts -a
  lax_psd_oracle,      // PSD oracle only inspects the diagonal
  fake_projection,     // 1/2 * 1 listed among the projections
  left_compression,    // J_p(g) = p g instead of p g p
  broken_join_hom,     // Boolean map that fails the join law
};

std::string to_string(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);
bool is_carrier_mutation(Mutation m);

/// Wraps `base` with a carrier-level mutation; returns `base` unchanged for
/// none and for the map-level mutations.
CarrierPtr mutate(CarrierPtr base, Mutation m);

}  // namespace ering
