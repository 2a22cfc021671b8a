#pragma once

#include <memory>
#include <optional>

#include "evplan/energetic.hpp"
#include "evplan/minplus.hpp"
#include "evplan/plan.hpp"

namespace evplan {

// The auxiliary graph has one state per (vertex, boundary charge) pair with
// boundary charge 0 or B. States 0..n-1 are the charge->=0 layer, states
// n..2n-1 the charge->=B layer.
inline int aux_state(int vertex, bool full_layer, int n) {
    return vertex + (full_layer ? n : 0);
}
inline int aux_vertex(int state, int n) { return state < n ? state : state - n; }
inline bool aux_full_layer(int state, int n) { return state >= n; }

// Per-entry witness: the charging stop realizing the arc, if any.
template <typename T>
struct AuxWitness {
    int station = -1;        // -1 = feasible without recharging
    Extended<T> amount{T{}}; // energy bought at the station
};

// Costs of travelling between auxiliary states with at most one recharge:
// entry ((u,a),(v,b)) is 0 when the trip is feasible without recharging,
// otherwise the cheapest single-stop charging cost, +inf if impossible.
template <typename T>
struct AuxCostMatrix {
    int n = 0;
    CostMatrix<T> cost;           // 2n x 2n, entries in [0, +inf]
    Grid<AuxWitness<T>> witness;  // same shape
};

template <typename T>
struct PlanWitnessData {
    Grid<int> next_hop;  // successor matrix over auxiliary states (unbounded)
    PowerTrace power;    // product trace (bounded)
    std::vector<RelaxLog> mfc_empty_logs, mfc_full_logs;  // indexed by source
    std::vector<RelaxLog> mic_empty_logs, mic_full_logs;  // indexed by target
};

template <typename T>
struct PlanCostResult {
    RelaxMode mode = RelaxMode::Strict;
    std::optional<long long> recharge_bound;  // delta when hop-bounded
    Grid<Extended<T>> costs;                  // n x n minimum plan costs
    ChargeMatrix<T> mfc_empty, mfc_full;      // max final charge, a = 0 / a = B
    ChargeMatrix<T> mic_empty, mic_full;      // min initial charge, b = 0 / b = B
    AuxCostMatrix<T> aux;
    CostMatrix<T> aux_dist;                   // distances over the auxiliary graph
    std::shared_ptr<const PlanWitnessData<T>> paths;  // null unless recorded
};

struct McpOptions {
    RelaxMode mode = RelaxMode::Strict;
    bool record_paths = false;
    std::uint64_t round_cap = 0;
    int threads = 0;
    OpCounters* counters = nullptr;
};

// Assembles the 2n x 2n auxiliary cost matrix from the four charge matrices
// via one rectangular min-plus product over the charging stations, plus the
// explicit zero-cost term for trips that need no recharge at all.
template <typename T>
AuxCostMatrix<T> build_aux_costs(const Graph<T>& g, const ChargeMatrix<T>& mfc_empty,
                                 const ChargeMatrix<T>& mfc_full,
                                 const ChargeMatrix<T>& mic_empty,
                                 const ChargeMatrix<T>& mic_full,
                                 OpCounters* counters = nullptr);

// All-pairs minimum plan cost starting with an empty battery.
template <typename T>
PlanCostResult<T> mcp_all_pairs(const Graph<T>& g, const McpOptions& opts = {});

// Same with at most delta recharges per plan.
template <typename T>
PlanCostResult<T> mcp_bounded(const Graph<T>& g, long long delta, const McpOptions& opts = {});

// Expands the recorded parent data into a concrete travel plan from s
// (empty battery) to t whose validated cost equals costs(s, t).
template <typename T>
TravelPlan<T> reconstruct_plan(const Graph<T>& g, const PlanCostResult<T>& result, int s, int t);

}  // namespace evplan
