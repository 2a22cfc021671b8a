#pragma once

#include <cstdint>

#include "evplan/extended.hpp"
#include "evplan/grid.hpp"

namespace evplan {

template <typename T>
using CostMatrix = Grid<Extended<T>>;

// Work counters used by tests to bound how much computation an operation
// performed. Inner-loop counts, not wall time.
struct OpCounters {
    std::uint64_t minplus_inner_ops = 0;  // k-loop steps of min-plus products
    std::uint64_t fw_inner_ops = 0;       // innermost Floyd-Warshall steps
    std::uint64_t full_products = 0;      // matrix-matrix products run
    std::uint64_t fw_runs = 0;            // Floyd-Warshall invocations
    std::uint64_t relax_steps = 0;        // arc relaxations in energetic solves
};

// C[i,j] = min_k A[i,k] + B[k,j]. Empty inner dimension yields all +inf.
// If arg_min is non-null it is resized to the result shape and receives the
// smallest k attaining each entry (-1 for +inf entries).
template <typename T>
CostMatrix<T> minplus_product(const CostMatrix<T>& a, const CostMatrix<T>& b,
                              Grid<int>* arg_min = nullptr, OpCounters* counters = nullptr);

// Row vector (1 x q) times matrix (q x r); same conventions as the full
// product but never counted as a cubic-stage entry.
template <typename T>
CostMatrix<T> minplus_vector_product(const CostMatrix<T>& row, const CostMatrix<T>& b,
                                     Grid<int>* arg_min = nullptr,
                                     OpCounters* counters = nullptr);

// All-pairs shortest path distances over the complete graph with arc costs
// D; the diagonal is first clamped to min(D[i,i], 0). If next_hop is
// non-null it receives the standard successor matrix for path extraction.
// Throws NegativeCycleDetected should a diagonal entry turn negative.
template <typename T>
CostMatrix<T> floyd_warshall(const CostMatrix<T>& d, Grid<int>* next_hop = nullptr,
                             OpCounters* counters = nullptr);

// Shortest distances restricted to walks with at most k arcs (diagonal
// clamped to min(D[i,i], 0) first), via square-and-multiply powering.
template <typename T>
CostMatrix<T> minplus_power(const CostMatrix<T>& d, std::uint64_t k,
                            OpCounters* counters = nullptr);

// Powering that keeps per-product argmins so bounded-hop paths can be
// reconstructed. Nodes form a DAG; node 0 is the clamped base matrix.
struct PowerTrace {
    struct Node {
        int left = -1;   // -1: leaf (one direct arc)
        int right = -1;
        Grid<int> via;   // argmin k per entry; empty for the leaf
    };
    std::vector<Node> nodes;
    int root = -1;

    // Appends the arc sequence of a shortest <=k-hop walk i -> j as state
    // pairs (direct hops in the base matrix) to out.
    void expand(int node, int i, int j, std::vector<std::pair<int, int>>& out) const;
};

template <typename T>
CostMatrix<T> minplus_power_traced(const CostMatrix<T>& d, std::uint64_t k, PowerTrace& trace,
                                   OpCounters* counters = nullptr);

template <typename T>
CostMatrix<T> minplus_identity(int n);

}  // namespace evplan
