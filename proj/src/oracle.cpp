#include "evplan/oracle.hpp"

#include <queue>

#include "evplan/errors.hpp"

namespace evplan {

namespace {

struct AdjacencyList {
    std::vector<std::vector<std::pair<int, long long>>> out;  // (head, cost)

    explicit AdjacencyList(const Graph<long long>& g) : out(static_cast<size_t>(g.num_vertices)) {
        for (const auto& a : g.arcs) out[static_cast<size_t>(a.tail)].push_back({a.head, a.cost});
    }
};

void require_source(const Graph<long long>& g, int source) {
    if (source < 0 || source >= g.num_vertices)
        throw Error(ErrorKind::InvalidArgument, "source vertex out of range");
}

void require_budget(long double states, std::uint64_t budget) {
    if (states > static_cast<long double>(budget))
        throw Error(ErrorKind::BudgetExceeded,
                    "state graph would need about " + std::to_string((double)states) +
                        " states, budget is " + std::to_string(budget));
}

using PqItem = std::pair<long long, std::uint64_t>;  // (money, state)

}  // namespace

std::vector<ExtInt> oracle_mcp(const Graph<long long>& g, int source,
                               std::uint64_t state_budget) {
    require_source(g, source);
    const long long cap = g.capacity;
    require_budget(static_cast<long double>(g.num_vertices) * (static_cast<long double>(cap) + 1),
                   state_budget);
    const std::uint64_t width = static_cast<std::uint64_t>(cap) + 1;
    const std::uint64_t num_states = static_cast<std::uint64_t>(g.num_vertices) * width;
    auto id = [&](int v, long long b) {
        return static_cast<std::uint64_t>(v) * width + static_cast<std::uint64_t>(b);
    };

    AdjacencyList adj(g);
    std::vector<ExtInt> dist(num_states, ExtInt::pos_inf());
    std::priority_queue<PqItem, std::vector<PqItem>, std::greater<>> pq;
    dist[id(source, 0)] = ExtInt(0);
    pq.push({0, id(source, 0)});
    while (!pq.empty()) {
        auto [money, state] = pq.top();
        pq.pop();
        if (dist[state] != ExtInt(money)) continue;
        const int v = static_cast<int>(state / width);
        const long long b = static_cast<long long>(state % width);
        for (auto [head, cost] : adj.out[static_cast<size_t>(v)]) {
            if (b < cost) continue;
            std::uint64_t next = id(head, std::min(b - cost, cap));
            if (ExtInt(money) < dist[next]) {
                dist[next] = ExtInt(money);
                pq.push({money, next});
            }
        }
        const auto& price = g.price[static_cast<size_t>(v)];
        if (price.is_finite() && b < cap) {
            std::uint64_t next = id(v, b + 1);
            ExtInt cand = ExtInt(money) + ExtInt(price.value());
            if (cand < dist[next]) {
                dist[next] = cand;
                pq.push({cand.value(), next});
            }
        }
    }

    std::vector<ExtInt> out(static_cast<size_t>(g.num_vertices), ExtInt::pos_inf());
    for (int t = 0; t < g.num_vertices; ++t)
        for (long long b = 0; b <= cap; ++b)
            out[static_cast<size_t>(t)] = min(out[static_cast<size_t>(t)], dist[id(t, b)]);
    return out;
}

std::vector<ExtInt> oracle_mcp_bounded(const Graph<long long>& g, int source, long long delta,
                                       std::uint64_t state_budget) {
    require_source(g, source);
    if (delta < 0) throw Error(ErrorKind::InvalidArgument, "recharge bound must be >= 0");
    const long long cap = g.capacity;
    require_budget(static_cast<long double>(g.num_vertices) *
                       (static_cast<long double>(cap) + 1) *
                       (static_cast<long double>(delta) + 1),
                   state_budget);
    const std::uint64_t width = static_cast<std::uint64_t>(cap) + 1;
    const std::uint64_t layers = static_cast<std::uint64_t>(delta) + 1;
    const std::uint64_t num_states =
        static_cast<std::uint64_t>(g.num_vertices) * width * layers;
    auto id = [&](int v, long long b, long long k) {
        return (static_cast<std::uint64_t>(v) * width + static_cast<std::uint64_t>(b)) * layers +
               static_cast<std::uint64_t>(k);
    };

    AdjacencyList adj(g);
    std::vector<ExtInt> dist(num_states, ExtInt::pos_inf());
    std::priority_queue<PqItem, std::vector<PqItem>, std::greater<>> pq;
    dist[id(source, 0, 0)] = ExtInt(0);
    pq.push({0, id(source, 0, 0)});
    while (!pq.empty()) {
        auto [money, state] = pq.top();
        pq.pop();
        if (dist[state] != ExtInt(money)) continue;
        const long long k = static_cast<long long>(state % layers);
        const std::uint64_t vb = state / layers;
        const int v = static_cast<int>(vb / width);
        const long long b = static_cast<long long>(vb % width);
        for (auto [head, cost] : adj.out[static_cast<size_t>(v)]) {
            if (b < cost) continue;
            std::uint64_t next = id(head, std::min(b - cost, cap), k);
            if (ExtInt(money) < dist[next]) {
                dist[next] = ExtInt(money);
                pq.push({money, next});
            }
        }
        const auto& price = g.price[static_cast<size_t>(v)];
        if (price.is_finite() && k < delta) {
            // One recharge is a maximal charging run, so jump to any level.
            for (long long up = b + 1; up <= cap; ++up) {
                std::uint64_t next = id(v, up, k + 1);
                ExtInt cand = ExtInt(money) + ExtInt(sat_mul_nonneg(price.value(), up - b));
                if (cand < dist[next]) {
                    dist[next] = cand;
                    pq.push({cand.value(), next});
                }
            }
        }
    }

    std::vector<ExtInt> out(static_cast<size_t>(g.num_vertices), ExtInt::pos_inf());
    for (int t = 0; t < g.num_vertices; ++t)
        for (long long b = 0; b <= cap; ++b)
            for (long long k = 0; k <= delta; ++k)
                out[static_cast<size_t>(t)] = min(out[static_cast<size_t>(t)], dist[id(t, b, k)]);
    return out;
}

std::vector<ExtInt> oracle_mfc(const Graph<long long>& g, int source, long long initial_charge,
                               std::uint64_t state_budget) {
    require_source(g, source);
    const long long cap = g.capacity;
    if (initial_charge < 0 || initial_charge > cap)
        throw Error(ErrorKind::ChargeOutOfRange, "initial charge outside [0, B]");
    require_budget(static_cast<long double>(g.num_vertices) * (static_cast<long double>(cap) + 1),
                   state_budget);
    const std::uint64_t width = static_cast<std::uint64_t>(cap) + 1;
    auto id = [&](int v, long long b) {
        return static_cast<std::uint64_t>(v) * width + static_cast<std::uint64_t>(b);
    };

    AdjacencyList adj(g);
    std::vector<bool> seen(static_cast<std::uint64_t>(g.num_vertices) * width, false);
    std::queue<std::uint64_t> work;
    seen[id(source, initial_charge)] = true;
    work.push(id(source, initial_charge));
    while (!work.empty()) {
        std::uint64_t state = work.front();
        work.pop();
        const int v = static_cast<int>(state / width);
        const long long b = static_cast<long long>(state % width);
        for (auto [head, cost] : adj.out[static_cast<size_t>(v)]) {
            if (b < cost) continue;
            std::uint64_t next = id(head, std::min(b - cost, cap));
            if (!seen[next]) {
                seen[next] = true;
                work.push(next);
            }
        }
    }

    std::vector<ExtInt> out(static_cast<size_t>(g.num_vertices), ExtInt::neg_inf());
    for (int t = 0; t < g.num_vertices; ++t)
        for (long long b = cap; b >= 0; --b)
            if (seen[id(t, b)]) {
                out[static_cast<size_t>(t)] = ExtInt(b);
                break;
            }
    return out;
}

std::vector<ExtInt> oracle_mic(const Graph<long long>& g, int source, long long required_final,
                               std::uint64_t state_budget) {
    require_source(g, source);
    if (required_final < 0 || required_final > g.capacity)
        throw Error(ErrorKind::ChargeOutOfRange, "required final charge outside [0, B]");
    std::vector<ExtInt> out(static_cast<size_t>(g.num_vertices), ExtInt::pos_inf());
    int unassigned = g.num_vertices;
    for (long long a = 0; a <= g.capacity && unassigned > 0; ++a) {
        auto reach = oracle_mfc(g, source, a, state_budget);
        for (int t = 0; t < g.num_vertices; ++t) {
            if (out[static_cast<size_t>(t)].is_pos_inf() &&
                reach[static_cast<size_t>(t)] >= ExtInt(required_final)) {
                out[static_cast<size_t>(t)] = ExtInt(a);
                --unassigned;
            }
        }
    }
    return out;
}

}  // namespace evplan
