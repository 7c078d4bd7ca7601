#pragma once

#include "hamvol/chekanov.hpp"
#include "hamvol/cn_tori.hpp"
#include "hamvol/cpn.hpp"
#include "hamvol/toric.hpp"

#include <json.hpp>

namespace hamvol::io {

using json = nlohmann::json;

// Rationals travel as "p/q" strings (q omitted when 1), vectors as arrays of
// such strings. Emitted documents re-serialise byte-identically after a
// parse round trip.

json to_json(const Rat& r);
json to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

json to_json(const chekanov::ChekanovInvariants& inv);
json to_json(const cn_tori::WitnessStep& step);
json to_json(const cpn::Certificate& cert);

/// Polytope files: {"dim": n, "facets": [{"mu": [int,...], "lambda": "p/q"}, ...]}.
toric::DelzantPolytope polytope_from_json(const json& j);
json to_json(const toric::DelzantPolytope& P);

}  // namespace hamvol::io
