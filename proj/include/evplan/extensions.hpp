#pragma once

#include "evplan/reduction.hpp"

namespace evplan {

// Arcs from a fresh source vertex: reaching target v starts the trip there
// with the given charge.
template <typename T>
struct SourceSpec {
    struct Entry {
        int vertex;
        T initial_charge;
    };
    std::vector<Entry> entries;
};

// Graph with one companion vertex per original vertex: companion(v) = n + v
// has no charging and a single arc to v of cost -a(v), so starting at the
// companion with an empty battery means starting at v with charge a(v).
template <typename T>
Graph<T> with_initial_charges(const Graph<T>& g, const std::vector<T>& initial_charge);

// Single-source minimum plan costs from a fresh source attached per spec,
// reusing an all-pairs result: one single-source MFC solve on the augmented
// graph plus two vector-matrix min-plus products. Requires a strict-mode
// all-pairs result; refuses fixpoint-mode input.
template <typename T>
std::vector<Extended<T>> add_source(const Graph<T>& g, const PlanCostResult<T>& precomputed,
                                    const SourceSpec<T>& spec, RelaxMode mode,
                                    OpCounters* counters = nullptr);

// Standard all-pairs shortest-path distances of a non-negative graph,
// computed through the plan solver on a companion construction where the
// battery can only be filled before departure. Used as a cross-check.
template <typename T>
Grid<Extended<T>> apsp_via_mcp(const Graph<T>& g, const McpOptions& opts = {});

}  // namespace evplan
