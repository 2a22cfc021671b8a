#include "evplan/energetic.hpp"

#include <algorithm>
#include <cmath>

#include "evplan/errors.hpp"
#include "evplan/parallel.hpp"

namespace evplan {

std::vector<int> RelaxLog::walk_to(int target) const {
    if (!recorded)
        throw Error(ErrorKind::WitnessUnavailable, "relaxation paths were not recorded");
    std::vector<int> arcs;
    int v = target;
    std::int64_t bound = static_cast<std::int64_t>(events.size());
    while (true) {
        const auto& list = events_at[static_cast<size_t>(v)];
        auto it = std::upper_bound(list.begin(), list.end(), bound - 1);
        if (it == list.begin()) {
            if (v != source)
                throw Error(ErrorKind::WitnessUnavailable,
                            "no witness chain to vertex " + std::to_string(target));
            break;
        }
        std::int64_t e = *(it - 1);
        const Event& ev = events[static_cast<size_t>(e)];
        arcs.push_back(ev.arc);
        v = ev.pred;
        bound = e;
    }
    std::reverse(arcs.begin(), arcs.end());
    return arcs;
}

namespace {

template <typename T>
std::uint64_t default_round_cap(const Graph<T>& g, T initial_charge) {
    bool integral = true;
    if constexpr (!std::is_integral_v<T>) {
        auto whole = [](double x) { return std::floor(x) == x; };
        integral = whole(g.capacity) && whole(initial_charge);
        for (const auto& a : g.arcs) {
            if (!whole(a.cost)) integral = false;
        }
    }
    if (!integral) return 10ull * static_cast<std::uint64_t>(g.num_vertices);
    // Integral case: every improvement is >= 1 and values are capped by B,
    // so 16*n*(B+1) rounds can never be the binding constraint.
    long double est = 16.0L * static_cast<long double>(g.num_vertices) *
                      (static_cast<long double>(g.capacity) + 1.0L);
    constexpr long double kMax = 4e18L;
    return est > kMax ? static_cast<std::uint64_t>(kMax) : static_cast<std::uint64_t>(est);
}

template <typename T>
class Relaxer {
  public:
    Relaxer(const Graph<T>& g, int source, T initial_charge, bool record)
        : g_(g), charge_(static_cast<size_t>(g.num_vertices), Extended<T>::neg_inf()) {
        charge_[static_cast<size_t>(source)] = Extended<T>(initial_charge);
        if (record) {
            log_.recorded = true;
            log_.source = source;
            log_.events_at.resize(static_cast<size_t>(g.num_vertices));
        }
    }

    bool relax_round() {
        bool changed = false;
        const int num_arcs = static_cast<int>(g_.arcs.size());
        for (int i = 0; i < num_arcs; ++i) {
            const auto& a = g_.arcs[static_cast<size_t>(i)];
            Extended<T> cand = step(charge_[static_cast<size_t>(a.tail)], a.cost, g_.capacity);
            if (cand > charge_[static_cast<size_t>(a.head)]) {
                charge_[static_cast<size_t>(a.head)] = cand;
                changed = true;
                if (log_.recorded) {
                    log_.events_at[static_cast<size_t>(a.head)].push_back(
                        static_cast<std::int64_t>(log_.events.size()));
                    log_.events.push_back({a.head, a.tail, i});
                }
            }
        }
        return changed;
    }

    bool any_improvement() const {
        for (size_t i = 0; i < g_.arcs.size(); ++i) {
            const auto& a = g_.arcs[i];
            if (step(charge_[static_cast<size_t>(a.tail)], a.cost, g_.capacity) >
                charge_[static_cast<size_t>(a.head)])
                return true;
        }
        return false;
    }

    std::vector<Extended<T>> take_charges() { return std::move(charge_); }
    RelaxLog take_log() { return std::move(log_); }

  private:
    const Graph<T>& g_;
    std::vector<Extended<T>> charge_;
    RelaxLog log_;
};

}  // namespace

template <typename T>
SingleSourceCharges<T> mfc_single_source(const Graph<T>& g, int source, T initial_charge,
                                         const EnergeticOptions& opts) {
    if (source < 0 || source >= g.num_vertices)
        throw Error(ErrorKind::InvalidArgument, "source vertex out of range");
    if (initial_charge < T{} || initial_charge > g.capacity)
        throw Error(ErrorKind::ChargeOutOfRange, "initial charge outside [0, B]");

    Relaxer<T> relaxer(g, source, initial_charge, opts.record_paths);
    SingleSourceCharges<T> out;
    if (opts.mode == RelaxMode::Strict) {
        const std::uint64_t limit = static_cast<std::uint64_t>(g.num_vertices) - 1;
        bool changed = true;
        while (changed && out.rounds < limit) {
            changed = relaxer.relax_round();
            ++out.rounds;
        }
        if (changed && relaxer.any_improvement())
            throw Error(ErrorKind::NegativeCycleDetected,
                        "charges still improving after " + std::to_string(g.num_vertices - 1) +
                            " rounds from source " + std::to_string(source));
    } else {
        const std::uint64_t cap =
            opts.round_cap ? opts.round_cap : default_round_cap(g, initial_charge);
        bool changed = true;
        while (changed) {
            if (out.rounds >= cap)
                throw Error(ErrorKind::NotConverged,
                            "no fixpoint after " + std::to_string(cap) + " rounds from source " +
                                std::to_string(source));
            changed = relaxer.relax_round();
            ++out.rounds;
        }
    }
    out.charge = relaxer.take_charges();
    out.log = relaxer.take_log();
    return out;
}

template <typename T>
AllPairsCharges<T> mfc_all_pairs(const Graph<T>& g, T initial_charge,
                                 const EnergeticOptions& opts) {
    const int n = g.num_vertices;
    AllPairsCharges<T> out{
        {ChargeBound::MaxFinalCharge, initial_charge, Grid<Extended<T>>(n, n)},
        {}};
    out.logs.resize(static_cast<size_t>(n));
    parallel_for(n, opts.threads, [&](int s) {
        auto row = mfc_single_source(g, s, initial_charge, opts);
        for (int t = 0; t < n; ++t)
            out.matrix.values(s, t) = row.charge[static_cast<size_t>(t)];
        out.logs[static_cast<size_t>(s)] = std::move(row.log);
    });
    return out;
}

template <typename T>
AllPairsCharges<T> mic_all_pairs(const Graph<T>& g, T required_final_charge,
                                 const EnergeticOptions& opts) {
    if (required_final_charge < T{} || required_final_charge > g.capacity)
        throw Error(ErrorKind::ChargeOutOfRange, "required final charge outside [0, B]");
    const int n = g.num_vertices;
    const Graph<T> rev = reverse(g);
    const T rev_start = g.capacity - required_final_charge;
    AllPairsCharges<T> out{
        {ChargeBound::MinInitialCharge, required_final_charge, Grid<Extended<T>>(n, n)},
        {}};
    out.logs.resize(static_cast<size_t>(n));
    parallel_for(n, opts.threads, [&](int t) {
        auto row = mfc_single_source(rev, t, rev_start, opts);
        for (int s = 0; s < n; ++s)
            out.matrix.values(s, t) =
                Extended<T>(g.capacity) - row.charge[static_cast<size_t>(s)];
        out.logs[static_cast<size_t>(t)] = std::move(row.log);
    });
    return out;
}

template <typename T>
Extended<T> depletion(const Graph<T>& g, int s, int t, T initial_charge,
                      const EnergeticOptions& opts) {
    if (t < 0 || t >= g.num_vertices)
        throw Error(ErrorKind::InvalidArgument, "target vertex out of range");
    auto row = mfc_single_source(g, s, initial_charge, opts);
    return Extended<T>(initial_charge) - row.charge[static_cast<size_t>(t)];
}

template SingleSourceCharges<long long> mfc_single_source(const Graph<long long>&, int, long long,
                                                          const EnergeticOptions&);
template SingleSourceCharges<double> mfc_single_source(const Graph<double>&, int, double,
                                                       const EnergeticOptions&);
template AllPairsCharges<long long> mfc_all_pairs(const Graph<long long>&, long long,
                                                  const EnergeticOptions&);
template AllPairsCharges<double> mfc_all_pairs(const Graph<double>&, double,
                                               const EnergeticOptions&);
template AllPairsCharges<long long> mic_all_pairs(const Graph<long long>&, long long,
                                                  const EnergeticOptions&);
template AllPairsCharges<double> mic_all_pairs(const Graph<double>&, double,
                                               const EnergeticOptions&);
template Extended<long long> depletion(const Graph<long long>&, int, int, long long,
                                       const EnergeticOptions&);
template Extended<double> depletion(const Graph<double>&, int, int, double,
                                    const EnergeticOptions&);

}  // namespace evplan
