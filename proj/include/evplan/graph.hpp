#pragma once

#include <string>
#include <vector>

#include "evplan/extended.hpp"

namespace evplan {

// Directed multigraph with signed arc energy costs, per-vertex charging
// prices (finite >= 0 or +inf) and a battery capacity. Immutable after
// construction; all solvers treat it as shared read-only state.
template <typename T>
struct Graph {
    struct Arc {
        int tail;
        int head;
        T cost;  // energy to traverse; may be negative

        friend bool operator==(const Arc&, const Arc&) = default;
    };

    int num_vertices = 0;
    std::vector<Arc> arcs;
    std::vector<Extended<T>> price;  // money per unit of energy; +inf = no charging
    T capacity = T{};                // battery capacity B >= 0

    bool is_station(int v) const { return price[static_cast<size_t>(v)].is_finite(); }

    std::vector<int> stations() const {
        std::vector<int> out;
        for (int v = 0; v < num_vertices; ++v) {
            if (is_station(v)) out.push_back(v);
        }
        return out;
    }

    // Largest absolute arc cost; 0 when there are no arcs.
    T max_abs_cost() const {
        T m = T{};
        for (const Arc& a : arcs) {
            T c = a.cost < T{} ? static_cast<T>(-a.cost) : a.cost;
            if (c > m) m = c;
        }
        return m;
    }
};

// Arcs (u,v,c) become (v,u,c); arc order, prices and capacity unchanged.
template <typename T>
Graph<T> reverse(const Graph<T>& g);

// Structural checks on an assembled graph (id ranges, price and capacity
// signs). Throws Error on violation.
template <typename T>
void check_graph(const Graph<T>& g);

// Canonical text format, '#' comments allowed:
//   line 1:      n m B
//   next n lines: vertex_id price      ("inf" = no charging)
//   next m lines: tail head cost
// Integer instantiation requires every numeric token to be integral.
template <typename T>
Graph<T> parse_graph(const std::string& text);

template <typename T>
std::string format_graph(const Graph<T>& g);

// Plain negative-cycle test on the arc costs (battery semantics ignored).
template <typename T>
bool has_negative_cycle(const Graph<T>& g);

}  // namespace evplan
