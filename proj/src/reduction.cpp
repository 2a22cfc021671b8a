#include "evplan/reduction.hpp"

#include <algorithm>
#include <cassert>

#include "evplan/errors.hpp"

namespace evplan {

namespace {

// -r(x) * alpha(u,x): the outgoing weight of the station product. An
// unreachable station blocks the route regardless of its price, so 0 * inf
// resolves to +inf here.
template <typename T>
Extended<T> station_out_weight(T price, Extended<T> alpha) {
    if (!alpha.is_finite()) return Extended<T>::pos_inf();
    return Extended<T>(T{}) - Extended<T>(sat_mul_nonneg(price, alpha.value()));
}

// r(x) * beta(x,v), with beta = +inf (target unreachable from x) mapping to
// +inf even at price zero.
template <typename T>
Extended<T> station_in_weight(T price, Extended<T> beta) {
    if (!beta.is_finite()) return Extended<T>::pos_inf();
    return Extended<T>(sat_mul_nonneg(price, beta.value()));
}

// (beta - alpha)^+ : energy to buy so that a leg arriving with alpha can
// continue needing beta. +inf if either leg is infeasible.
template <typename T>
Extended<T> recharge_amount(Extended<T> alpha, Extended<T> beta) {
    if (!alpha.is_finite() || !beta.is_finite()) return Extended<T>::pos_inf();
    return max(beta - alpha, Extended<T>(T{}));
}

template <typename T>
Extended<T> station_cost(T price, Extended<T> alpha, Extended<T> beta) {
    Extended<T> amount = recharge_amount(alpha, beta);
    if (!amount.is_finite()) return Extended<T>::pos_inf();
    return Extended<T>(sat_mul_nonneg(price, amount.value()));
}

}  // namespace

template <typename T>
AuxCostMatrix<T> build_aux_costs(const Graph<T>& g, const ChargeMatrix<T>& mfc_empty,
                                 const ChargeMatrix<T>& mfc_full,
                                 const ChargeMatrix<T>& mic_empty,
                                 const ChargeMatrix<T>& mic_full, OpCounters* counters) {
    const int n = g.num_vertices;
    assert(mfc_empty.values.rows() == n && mic_empty.values.rows() == n);
    assert(mfc_full.values.rows() == n && mic_full.values.rows() == n);
    const std::vector<int> stations = g.stations();
    const int p = static_cast<int>(stations.size());

    auto alpha_of = [&](bool full) -> const Grid<Extended<T>>& {
        return full ? mfc_full.values : mfc_empty.values;
    };
    auto beta_of = [&](bool full) -> const Grid<Extended<T>>& {
        return full ? mic_full.values : mic_empty.values;
    };

    // Layered product: 2n x p outgoing weights times p x 2n incoming weights.
    CostMatrix<T> out_w(2 * n, p);
    CostMatrix<T> in_w(p, 2 * n);
    for (int k = 0; k < p; ++k) {
        const int x = stations[static_cast<size_t>(k)];
        const T price = g.price[static_cast<size_t>(x)].value();
        for (int state = 0; state < 2 * n; ++state) {
            const int u = aux_vertex(state, n);
            const bool full = aux_full_layer(state, n);
            out_w(state, k) = station_out_weight(price, alpha_of(full)(u, x));
            in_w(k, state) = station_in_weight(price, beta_of(full)(x, u));
        }
    }

    Grid<int> arg_min;
    CostMatrix<T> through = minplus_product(out_w, in_w, &arg_min, counters);

    AuxCostMatrix<T> aux;
    aux.n = n;
    aux.cost = CostMatrix<T>(2 * n, 2 * n, Extended<T>::pos_inf());
    aux.witness = Grid<AuxWitness<T>>(2 * n, 2 * n);
    const Extended<T> zero(T{});
    for (int i = 0; i < 2 * n; ++i) {
        const int u = aux_vertex(i, n);
        const bool a_full = aux_full_layer(i, n);
        const auto& alpha_row = alpha_of(a_full);
        for (int j = 0; j < 2 * n; ++j) {
            const int v = aux_vertex(j, n);
            const bool b_full = aux_full_layer(j, n);
            const Extended<T> bound = b_full ? Extended<T>(g.capacity) : zero;
            const bool direct_ok = alpha_row(u, v) >= bound;
            Extended<T> via = through(i, j);
            if (via < zero) via = zero;
            Extended<T> value = direct_ok ? min(zero, via) : via;
            aux.cost(i, j) = value;
            AuxWitness<T>& w = aux.witness(i, j);
            if (value.is_pos_inf() || (direct_ok && zero <= via)) {
                w = {};  // no recharge needed (or entry unusable)
            } else if (value > zero) {
                const int x = stations[static_cast<size_t>(arg_min(i, j))];
                w.station = x;
                w.amount = recharge_amount(alpha_row(u, x), beta_of(b_full)(x, v));
            } else {
                // Zero-cost stop but no free direct route: pick the lowest
                // station id whose single-stop cost is zero.
                for (int k = 0; k < p; ++k) {
                    const int x = stations[static_cast<size_t>(k)];
                    const T price = g.price[static_cast<size_t>(x)].value();
                    const Extended<T> alpha = alpha_row(u, x);
                    const Extended<T> beta = beta_of(b_full)(x, v);
                    if (station_cost(price, alpha, beta) == zero) {
                        w.station = x;
                        w.amount = recharge_amount(alpha, beta);
                        break;
                    }
                }
                assert(w.station >= 0);
            }
        }
    }
    return aux;
}

namespace {

template <typename T>
struct Pipeline {
    AllPairsCharges<T> mfc_empty, mfc_full, mic_empty, mic_full;
    AuxCostMatrix<T> aux;
};

template <typename T>
Pipeline<T> run_pipeline(const Graph<T>& g, const McpOptions& opts) {
    EnergeticOptions eopts{opts.mode, opts.record_paths, opts.round_cap, opts.threads};
    Pipeline<T> pipe;
    pipe.mfc_empty = mfc_all_pairs(g, T{}, eopts);
    pipe.mfc_full = mfc_all_pairs(g, g.capacity, eopts);
    pipe.mic_empty = mic_all_pairs(g, T{}, eopts);
    pipe.mic_full = mic_all_pairs(g, g.capacity, eopts);
    if (opts.counters) {
        // Relaxation work is not tracked per arc; count the solves instead.
        opts.counters->relax_steps += 4ull * static_cast<std::uint64_t>(g.num_vertices);
    }
    pipe.aux = build_aux_costs(g, pipe.mfc_empty.matrix, pipe.mfc_full.matrix,
                               pipe.mic_empty.matrix, pipe.mic_full.matrix, opts.counters);
    return pipe;
}

template <typename T>
void move_pipeline_into(Pipeline<T>&& pipe, PlanCostResult<T>& result,
                        PlanWitnessData<T>* witness) {
    if (witness) {
        witness->mfc_empty_logs = std::move(pipe.mfc_empty.logs);
        witness->mfc_full_logs = std::move(pipe.mfc_full.logs);
        witness->mic_empty_logs = std::move(pipe.mic_empty.logs);
        witness->mic_full_logs = std::move(pipe.mic_full.logs);
    }
    result.mfc_empty = std::move(pipe.mfc_empty.matrix);
    result.mfc_full = std::move(pipe.mfc_full.matrix);
    result.mic_empty = std::move(pipe.mic_empty.matrix);
    result.mic_full = std::move(pipe.mic_full.matrix);
    result.aux = std::move(pipe.aux);
}

}  // namespace

template <typename T>
PlanCostResult<T> mcp_all_pairs(const Graph<T>& g, const McpOptions& opts) {
    check_graph(g);
    const int n = g.num_vertices;
    Pipeline<T> pipe = run_pipeline(g, opts);

    PlanCostResult<T> result;
    result.mode = opts.mode;
    auto witness = opts.record_paths ? std::make_shared<PlanWitnessData<T>>() : nullptr;
    result.aux_dist = floyd_warshall(pipe.aux.cost, witness ? &witness->next_hop : nullptr,
                                     opts.counters);
    move_pipeline_into(std::move(pipe), result, witness.get());
    result.costs = Grid<Extended<T>>(n, n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            result.costs(s, t) = result.aux_dist(aux_state(s, false, n), aux_state(t, false, n));
    result.paths = std::move(witness);
    return result;
}

template <typename T>
PlanCostResult<T> mcp_bounded(const Graph<T>& g, long long delta, const McpOptions& opts) {
    check_graph(g);
    if (delta < 0) throw Error(ErrorKind::InvalidArgument, "recharge bound must be >= 0");
    const int n = g.num_vertices;

    PlanCostResult<T> result;
    result.mode = opts.mode;
    result.recharge_bound = delta;

    if (delta == 0) {
        // No recharging at all: feasible exactly when the empty-start trip
        // works, and then it is free.
        EnergeticOptions eopts{opts.mode, opts.record_paths, opts.round_cap, opts.threads};
        auto mfc = mfc_all_pairs(g, T{}, eopts);
        result.costs = Grid<Extended<T>>(n, n, Extended<T>::pos_inf());
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (mfc.matrix.values(s, t) >= Extended<T>(T{}))
                    result.costs(s, t) = Extended<T>(T{});
        if (opts.record_paths) {
            auto witness = std::make_shared<PlanWitnessData<T>>();
            witness->mfc_empty_logs = std::move(mfc.logs);
            result.paths = std::move(witness);
        }
        result.mfc_empty = std::move(mfc.matrix);
        return result;
    }

    Pipeline<T> pipe = run_pipeline(g, opts);
    auto witness = opts.record_paths ? std::make_shared<PlanWitnessData<T>>() : nullptr;
    if (witness) {
        result.aux_dist = minplus_power_traced(pipe.aux.cost,
                                               static_cast<std::uint64_t>(delta),
                                               witness->power, opts.counters);
    } else {
        result.aux_dist =
            minplus_power(pipe.aux.cost, static_cast<std::uint64_t>(delta), opts.counters);
    }
    move_pipeline_into(std::move(pipe), result, witness.get());
    result.costs = Grid<Extended<T>>(n, n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            result.costs(s, t) = result.aux_dist(aux_state(s, false, n), aux_state(t, false, n));
    result.paths = std::move(witness);
    return result;
}

namespace {

template <typename T>
class PlanBuilder {
  public:
    PlanBuilder(const Graph<T>& g, const PlanCostResult<T>& result, int s)
        : g_(g), result_(result), paths_(*result.paths) {
        plan_.states.push_back({s, T{}});
        charge_ = Extended<T>(T{});
    }

    void expand_no_recharge(bool a_full, int u, int v) {
        assert(plan_.states.back().vertex == u);
        replay_forward(alpha_log(a_full, u).walk_to(v));
    }

    void expand_aux_arc(int from_state, int to_state) {
        const int n = g_.num_vertices;
        const int u = aux_vertex(from_state, n);
        const bool a_full = aux_full_layer(from_state, n);
        const int v = aux_vertex(to_state, n);
        const bool b_full = aux_full_layer(to_state, n);
        assert(plan_.states.back().vertex == u);
        (void)u;

        const AuxWitness<T>& w = result_.aux.witness(from_state, to_state);
        if (w.station < 0) {
            expand_no_recharge(a_full, u, v);
        } else {
            replay_forward(alpha_log(a_full, u).walk_to(w.station));
            const Extended<T> level =
                (b_full ? result_.mic_full : result_.mic_empty).values(w.station, v);
            assert(level.is_finite());
            recharge_to(level.value());
            replay_backward(mic_log(b_full, v).walk_to(w.station));
        }
        assert(plan_.states.back().vertex == v);
        (void)v;
    }

    TravelPlan<T> finish() {
        plan_.total_cost = money_;
        return std::move(plan_);
    }

  private:
    const RelaxLog& alpha_log(bool full, int source) const {
        const auto& logs = full ? paths_.mfc_full_logs : paths_.mfc_empty_logs;
        return logs[static_cast<size_t>(source)];
    }
    const RelaxLog& mic_log(bool full, int target) const {
        const auto& logs = full ? paths_.mic_full_logs : paths_.mic_empty_logs;
        return logs[static_cast<size_t>(target)];
    }

    void traverse(int arc_index) {
        const auto& arc = g_.arcs[static_cast<size_t>(arc_index)];
        assert(arc.tail == plan_.states.back().vertex);
        charge_ = step(charge_, arc.cost, g_.capacity);
        assert(charge_.is_finite());
        plan_.states.push_back({arc.head, charge_.value()});
        plan_.steps.push_back(TravelPlan<T>::StepKind::Traverse);
    }

    void replay_forward(const std::vector<int>& arcs) {
        for (int idx : arcs) traverse(idx);
    }

    // A witness walk on the reversed graph, traversed here in the original
    // direction: arcs in reverse order, original orientation.
    void replay_backward(const std::vector<int>& arcs) {
        for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) traverse(*it);
    }

    void recharge_to(T level) {
        const T current = plan_.states.back().charge;
        if (!(level > current)) return;  // surplus charge already covers it
        const int v = plan_.states.back().vertex;
        const auto& price = g_.price[static_cast<size_t>(v)];
        assert(price.is_finite());
        money_ += sat_mul_nonneg(price.value(), static_cast<T>(level - current));
        charge_ = Extended<T>(level);
        plan_.states.push_back({v, level});
        plan_.steps.push_back(TravelPlan<T>::StepKind::Recharge);
    }

    const Graph<T>& g_;
    const PlanCostResult<T>& result_;
    const PlanWitnessData<T>& paths_;
    TravelPlan<T> plan_;
    Extended<T> charge_;
    T money_ = T{};
};

}  // namespace

template <typename T>
TravelPlan<T> reconstruct_plan(const Graph<T>& g, const PlanCostResult<T>& result, int s, int t) {
    const int n = g.num_vertices;
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw Error(ErrorKind::InvalidArgument, "plan endpoints out of range");
    if (result.costs(s, t).is_pos_inf())
        throw Error(ErrorKind::InvalidArgument, "no travel plan exists for this pair");
    if (!result.paths)
        throw Error(ErrorKind::WitnessUnavailable,
                    "result carries no parent data; rerun with path recording");

    PlanBuilder<T> builder(g, result, s);
    const int from = aux_state(s, false, n);
    const int to = aux_state(t, false, n);
    if (result.recharge_bound && *result.recharge_bound == 0) {
        if (s != t) builder.expand_no_recharge(false, s, t);
        return builder.finish();
    }

    std::vector<std::pair<int, int>> hops;
    if (result.recharge_bound) {
        result.paths->power.expand(result.paths->power.root, from, to, hops);
    } else {
        const Grid<int>& next = result.paths->next_hop;
        int cur = from;
        int guard = 0;
        while (cur != to) {
            if (++guard > 2 * n + 1)
                throw Error(ErrorKind::WitnessUnavailable, "cyclic successor chain");
            int nxt = next(cur, to);
            hops.emplace_back(cur, nxt);
            cur = nxt;
        }
    }
    for (auto [a, b] : hops) builder.expand_aux_arc(a, b);
    return builder.finish();
}

template AuxCostMatrix<long long> build_aux_costs(const Graph<long long>&,
                                                  const ChargeMatrix<long long>&,
                                                  const ChargeMatrix<long long>&,
                                                  const ChargeMatrix<long long>&,
                                                  const ChargeMatrix<long long>&, OpCounters*);
template AuxCostMatrix<double> build_aux_costs(const Graph<double>&, const ChargeMatrix<double>&,
                                               const ChargeMatrix<double>&,
                                               const ChargeMatrix<double>&,
                                               const ChargeMatrix<double>&, OpCounters*);
template PlanCostResult<long long> mcp_all_pairs(const Graph<long long>&, const McpOptions&);
template PlanCostResult<double> mcp_all_pairs(const Graph<double>&, const McpOptions&);
template PlanCostResult<long long> mcp_bounded(const Graph<long long>&, long long,
                                               const McpOptions&);
template PlanCostResult<double> mcp_bounded(const Graph<double>&, long long, const McpOptions&);
template TravelPlan<long long> reconstruct_plan(const Graph<long long>&,
                                                const PlanCostResult<long long>&, int, int);
template TravelPlan<double> reconstruct_plan(const Graph<double>&, const PlanCostResult<double>&,
                                             int, int);

}  // namespace evplan
