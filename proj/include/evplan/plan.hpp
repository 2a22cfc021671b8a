#pragma once

#include <string>
#include <vector>

#include "evplan/graph.hpp"

namespace evplan {

// A travel plan: a sequence of (vertex, charge) states where each step is
// either an arc traversal or a recharge at the current vertex. The cost is
// the total money spent on recharges.
template <typename T>
struct TravelPlan {
    enum class StepKind { Traverse, Recharge };

    struct State {
        int vertex;
        T charge;
    };

    std::vector<State> states;
    std::vector<StepKind> steps;  // steps[i] moves states[i] -> states[i+1]
    T total_cost = T{};

    int num_recharges() const {
        int k = 0;
        for (auto s : steps) k += (s == StepKind::Recharge);
        return k;
    }
};

// Checks every step of the plan against the graph and recomputes its cost.
// Returns the recomputed cost, which must match the stated total.
// Throws IllegalTraversal / IllegalRecharge / ChargeOutOfRange.
template <typename T>
T validate_plan(const Graph<T>& g, T initial_charge, const TravelPlan<T>& plan,
                T tol = numeric_traits<T>::tolerance());

// True when between any two consecutive recharges the plan visits a state
// with an empty or full battery. Optimal plans can always be arranged this
// way; reconstructed plans are checked against it.
template <typename T>
bool has_boundary_normal_form(const TravelPlan<T>& plan, T capacity,
                              T tol = numeric_traits<T>::tolerance());

// Text form, '#' comments allowed:
//   plan <num_states> <total_cost>
//   <vertex> <charge>             (first state)
//   <vertex> <charge> move|charge (how each later state was reached)
template <typename T>
std::string format_plan(const TravelPlan<T>& plan);

template <typename T>
TravelPlan<T> parse_plan(const std::string& text);

}  // namespace evplan
