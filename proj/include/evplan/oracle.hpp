#pragma once

#include <cstdint>
#include <vector>

#include "evplan/graph.hpp"

namespace evplan {

// Ground-truth solvers that enumerate the explicit (vertex, charge) state
// graph. Only integer instances are accepted: the discretization is exact
// there and nowhere else. Intended for desk-scale inputs; anything whose
// state count exceeds the budget is rejected rather than approximated.

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

// Minimum plan cost from s (empty battery) to every vertex.
std::vector<ExtInt> oracle_mcp(const Graph<long long>& g, int source,
                               std::uint64_t state_budget = kDefaultOracleBudget);

// Same with at most delta recharges; a maximal charging run at one vertex
// counts as a single recharge.
std::vector<ExtInt> oracle_mcp_bounded(const Graph<long long>& g, int source, long long delta,
                                       std::uint64_t state_budget = kDefaultOracleBudget);

// Maximum final charge at every vertex from s with initial charge a,
// no recharging; exact also in the presence of negative cycles.
std::vector<ExtInt> oracle_mfc(const Graph<long long>& g, int source, long long initial_charge,
                               std::uint64_t state_budget = kDefaultOracleBudget);

// Minimum initial charge at s to reach each target with final charge >= b,
// found by scanning initial charges with oracle_mfc reachability.
std::vector<ExtInt> oracle_mic(const Graph<long long>& g, int source, long long required_final,
                               std::uint64_t state_budget = kDefaultOracleBudget);

}  // namespace evplan
