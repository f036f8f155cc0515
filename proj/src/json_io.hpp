#pragma once

#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "distribution.hpp"
#include "domination.hpp"
#include "dyadic.hpp"
#include "graph.hpp"
#include "reachability.hpp"
#include "search.hpp"

namespace pebblelab {

// All result documents use insertion-ordered JSON and contain only integers,
// strings, booleans and exact dyadic rationals ({"num": a, "log2_den": b});
// no floating point crosses the interface.
using ojson = nlohmann::ordered_json;

const char* system_name(MoveSystem sys);
MoveSystem system_from_name(const std::string& name);

ojson dyadic_to_json(const Dyadic& d);
ojson move_to_json(const Move& m);
ojson distribution_to_json(const Distribution& d);

ojson stats_to_json(const Graph& g);
ojson reach_to_json(const Graph& g, const Distribution& p, int target, MoveSystem sys,
                    const ReachResult& r);
ojson solvable_to_json(const Distribution& p, MoveSystem sys, const SolvableReport& rep);
ojson gamma_to_json(const DominationCertificate& cert);
ojson bounds_to_json(const BoundReport& report);
ojson optimum_to_json(const OptimumCertificate& cert);

} // namespace pebblelab
