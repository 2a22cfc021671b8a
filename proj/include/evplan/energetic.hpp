#pragma once

#include <cstdint>
#include <vector>

#include "evplan/graph.hpp"
#include "evplan/grid.hpp"

namespace evplan {

enum class RelaxMode {
    Strict,    // n-1 relaxation rounds, then a probe round; improvement there
               // means a negative cycle is reachable and the solve fails
    Fixpoint,  // iterate until no arc improves; exact whenever it terminates
};

// Charge reached after traversing an arc of the given cost: -inf if the
// charge cannot pay for the arc, otherwise min(charge - cost, B).
template <typename T>
Extended<T> step(Extended<T> charge, T cost, T capacity) {
    if (charge.is_neg_inf()) return Extended<T>::neg_inf();
    if (charge.value() < cost) return Extended<T>::neg_inf();
    Extended<T> after = charge - Extended<T>(cost);
    return min(after, Extended<T>(capacity));
}

// Log of accepted relaxations for one single-source solve. Event order is
// the update sequence; walking predecessors through strictly earlier events
// yields an acyclic witness path even under clamping and negative cycles.
struct RelaxLog {
    struct Event {
        int vertex;
        int pred;
        int arc;
    };

    bool recorded = false;
    int source = -1;
    std::vector<Event> events;
    std::vector<std::vector<std::int64_t>> events_at;  // per vertex, ascending

    // Arc indices of a witness walk source -> target. Target must have been
    // reached; an empty result means the trivial walk at the source.
    std::vector<int> walk_to(int target) const;
};

struct EnergeticOptions {
    RelaxMode mode = RelaxMode::Strict;
    bool record_paths = false;
    std::uint64_t round_cap = 0;  // 0 = derive from instance (fixpoint mode only)
    int threads = 0;              // 0 = hardware concurrency
};

template <typename T>
struct SingleSourceCharges {
    std::vector<Extended<T>> charge;  // entry v: max final charge at v, or -inf
    RelaxLog log;
    std::uint64_t rounds = 0;
};

enum class ChargeBound {
    MaxFinalCharge,    // entries in {-inf} u [0, B]; boundary = initial charge
    MinInitialCharge,  // entries in [0, B] u {+inf}; boundary = required final charge
};

template <typename T>
struct ChargeMatrix {
    ChargeBound kind;
    T boundary;
    Grid<Extended<T>> values;
};

template <typename T>
struct AllPairsCharges {
    ChargeMatrix<T> matrix;
    // One log per solve source. For MinInitialCharge results the solves ran
    // on the reversed graph: logs[t] witnesses column t of the matrix.
    std::vector<RelaxLog> logs;
};

// Maximum final charge from s with initial charge a, no recharging.
template <typename T>
SingleSourceCharges<T> mfc_single_source(const Graph<T>& g, int source, T initial_charge,
                                         const EnergeticOptions& opts = {});

template <typename T>
AllPairsCharges<T> mfc_all_pairs(const Graph<T>& g, T initial_charge,
                                 const EnergeticOptions& opts = {});

// Minimum initial charge to reach each target with final charge >= b,
// computed on the reversed graph: beta(s,t) = B - alpha_rev(t,s).
template <typename T>
AllPairsCharges<T> mic_all_pairs(const Graph<T>& g, T required_final_charge,
                                 const EnergeticOptions& opts = {});

// Minimum battery depletion a - alpha(s,t); +inf when t is unreachable.
template <typename T>
Extended<T> depletion(const Graph<T>& g, int s, int t, T initial_charge,
                      const EnergeticOptions& opts = {});

}  // namespace evplan
