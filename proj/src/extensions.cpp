#include "evplan/extensions.hpp"

#include "evplan/errors.hpp"

namespace evplan {

template <typename T>
Graph<T> with_initial_charges(const Graph<T>& g, const std::vector<T>& initial_charge) {
    check_graph(g);
    if (static_cast<int>(initial_charge.size()) != g.num_vertices)
        throw Error(ErrorKind::InvalidArgument, "need one initial charge per vertex");
    for (T a : initial_charge) {
        if (a < T{} || a > g.capacity)
            throw Error(ErrorKind::ChargeOutOfRange, "initial charge outside [0, B]");
    }
    Graph<T> out;
    out.num_vertices = 2 * g.num_vertices;
    out.capacity = g.capacity;
    out.price = g.price;
    out.price.resize(static_cast<size_t>(out.num_vertices), Extended<T>::pos_inf());
    out.arcs = g.arcs;
    for (int v = 0; v < g.num_vertices; ++v) {
        out.arcs.push_back({g.num_vertices + v, v, static_cast<T>(-initial_charge[static_cast<size_t>(v)])});
    }
    return out;
}

template <typename T>
std::vector<Extended<T>> add_source(const Graph<T>& g, const PlanCostResult<T>& precomputed,
                                    const SourceSpec<T>& spec, RelaxMode mode,
                                    OpCounters* counters) {
    check_graph(g);
    if (mode != RelaxMode::Strict || precomputed.mode != RelaxMode::Strict)
        throw Error(ErrorKind::InvalidArgument,
                    "add_source requires strict mode and a strict-mode all-pairs result");
    if (precomputed.recharge_bound)
        throw Error(ErrorKind::InvalidArgument,
                    "add_source requires an unbounded all-pairs result");
    const int n = g.num_vertices;
    if (precomputed.costs.rows() != n)
        throw Error(ErrorKind::InvalidArgument, "all-pairs result does not match the graph");
    for (const auto& e : spec.entries) {
        if (e.vertex < 0 || e.vertex >= n)
            throw Error(ErrorKind::InvalidArgument, "source spec vertex out of range");
        if (e.initial_charge < T{} || e.initial_charge > g.capacity)
            throw Error(ErrorKind::ChargeOutOfRange, "source spec charge outside [0, B]");
    }

    // Augmented graph: fresh source n with no charging, arcs (n, v_i, -a_i).
    Graph<T> aug = g;
    aug.num_vertices = n + 1;
    aug.price.push_back(Extended<T>::pos_inf());
    for (const auto& e : spec.entries)
        aug.arcs.push_back({n, e.vertex, static_cast<T>(-e.initial_charge)});

    EnergeticOptions eopts{RelaxMode::Strict, false, 0, 1};
    auto reach = mfc_single_source(aug, n, T{}, eopts);
    if (counters) counters->relax_steps += reach.rounds * aug.arcs.size();

    // One row of auxiliary costs from the fresh source, via a vector-matrix
    // product over the stations plus the no-recharge term.
    const std::vector<int> stations = g.stations();
    const int p = static_cast<int>(stations.size());
    CostMatrix<T> out_w(1, p);
    CostMatrix<T> in_w(p, 2 * n);
    for (int k = 0; k < p; ++k) {
        const int x = stations[static_cast<size_t>(k)];
        const T price = g.price[static_cast<size_t>(x)].value();
        const Extended<T> alpha = reach.charge[static_cast<size_t>(x)];
        out_w(0, k) = alpha.is_finite()
                          ? Extended<T>(T{}) - Extended<T>(sat_mul_nonneg(price, alpha.value()))
                          : Extended<T>::pos_inf();
        for (int state = 0; state < 2 * n; ++state) {
            const int v = aux_vertex(state, n);
            const Extended<T> beta = (aux_full_layer(state, n) ? precomputed.mic_full
                                                               : precomputed.mic_empty)
                                         .values(x, v);
            in_w(k, state) =
                beta.is_finite() ? Extended<T>(sat_mul_nonneg(price, beta.value()))
                                 : Extended<T>::pos_inf();
        }
    }
    CostMatrix<T> row = minplus_vector_product(out_w, in_w, nullptr, counters);
    const Extended<T> zero(T{});
    for (int state = 0; state < 2 * n; ++state) {
        const int v = aux_vertex(state, n);
        const Extended<T> bound =
            aux_full_layer(state, n) ? Extended<T>(g.capacity) : zero;
        if (row(0, state) < zero) row(0, state) = zero;
        if (reach.charge[static_cast<size_t>(v)] >= bound) row(0, state) = zero;
    }

    // Compose with the precomputed distances over the auxiliary graph.
    CostMatrix<T> dist = minplus_vector_product(row, precomputed.aux_dist, nullptr, counters);
    std::vector<Extended<T>> out(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(v)] = dist(0, aux_state(v, false, n));
    return out;
}

template <typename T>
Grid<Extended<T>> apsp_via_mcp(const Graph<T>& g, const McpOptions& opts) {
    check_graph(g);
    for (const auto& a : g.arcs) {
        if (a.cost < T{})
            throw Error(ErrorKind::InvalidArgument,
                        "shortest-path cross-check requires non-negative arc costs");
    }
    const int n = g.num_vertices;
    Graph<T> aug;
    aug.num_vertices = 2 * n;
    aug.capacity = sat_mul_nonneg<T>(static_cast<T>(n), g.max_abs_cost());
    aug.price.assign(static_cast<size_t>(n), Extended<T>::pos_inf());
    aug.price.resize(static_cast<size_t>(2 * n), Extended<T>(static_cast<T>(1)));
    aug.arcs = g.arcs;
    for (int v = 0; v < n; ++v) aug.arcs.push_back({n + v, v, T{}});

    McpOptions mopts = opts;
    mopts.mode = RelaxMode::Strict;
    auto result = mcp_all_pairs(aug, mopts);
    Grid<Extended<T>> dist(n, n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) dist(s, t) = result.costs(n + s, t);
    return dist;
}

template Graph<long long> with_initial_charges(const Graph<long long>&,
                                               const std::vector<long long>&);
template Graph<double> with_initial_charges(const Graph<double>&, const std::vector<double>&);
template std::vector<Extended<long long>> add_source(const Graph<long long>&,
                                                     const PlanCostResult<long long>&,
                                                     const SourceSpec<long long>&, RelaxMode,
                                                     OpCounters*);
template std::vector<Extended<double>> add_source(const Graph<double>&,
                                                  const PlanCostResult<double>&,
                                                  const SourceSpec<double>&, RelaxMode,
                                                  OpCounters*);
template Grid<Extended<long long>> apsp_via_mcp(const Graph<long long>&, const McpOptions&);
template Grid<Extended<double>> apsp_via_mcp(const Graph<double>&, const McpOptions&);

}  // namespace evplan
