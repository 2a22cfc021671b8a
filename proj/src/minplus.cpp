#include "evplan/minplus.hpp"

#include <cassert>

#include "evplan/errors.hpp"

namespace evplan {

namespace {

template <typename T>
void require_no_neg_inf(const CostMatrix<T>& m) {
#ifndef NDEBUG
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) assert(!m(i, j).is_neg_inf());
#else
    (void)m;
#endif
}

template <typename T>
CostMatrix<T> product_impl(const CostMatrix<T>& a, const CostMatrix<T>& b, Grid<int>* arg_min,
                           OpCounters* counters, bool count_as_full) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch,
                    "min-plus product: inner dimensions " + std::to_string(a.cols()) + " and " +
                        std::to_string(b.rows()) + " differ");
    require_no_neg_inf(a);
    require_no_neg_inf(b);
    const int p = a.rows(), q = a.cols(), r = b.cols();
    CostMatrix<T> c(p, r, Extended<T>::pos_inf());
    if (arg_min) *arg_min = Grid<int>(p, r, -1);
    for (int i = 0; i < p; ++i) {
        auto* out = c.row(i);
        for (int k = 0; k < q; ++k) {
            const Extended<T> aik = a(i, k);
            if (aik.is_pos_inf()) continue;
            const auto* brow = b.row(k);
            for (int j = 0; j < r; ++j) {
                if (brow[j].is_pos_inf()) continue;
                Extended<T> cand = aik + brow[j];
                if (cand < out[j]) {
                    out[j] = cand;
                    if (arg_min) (*arg_min)(i, j) = k;
                }
            }
        }
    }
    if (counters) {
        counters->minplus_inner_ops +=
            static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(q) *
            static_cast<std::uint64_t>(r);
        if (count_as_full) ++counters->full_products;
    }
    return c;
}

}  // namespace

template <typename T>
CostMatrix<T> minplus_product(const CostMatrix<T>& a, const CostMatrix<T>& b, Grid<int>* arg_min,
                              OpCounters* counters) {
    return product_impl(a, b, arg_min, counters, true);
}

template <typename T>
CostMatrix<T> minplus_vector_product(const CostMatrix<T>& row, const CostMatrix<T>& b,
                                     Grid<int>* arg_min, OpCounters* counters) {
    if (row.rows() != 1)
        throw Error(ErrorKind::DimensionMismatch, "vector product expects a single row");
    return product_impl(row, b, arg_min, counters, false);
}

template <typename T>
CostMatrix<T> floyd_warshall(const CostMatrix<T>& d, Grid<int>* next_hop, OpCounters* counters) {
    if (d.rows() != d.cols())
        throw Error(ErrorKind::DimensionMismatch, "Floyd-Warshall expects a square matrix");
    require_no_neg_inf(d);
    const int n = d.rows();
    CostMatrix<T> dist = d;
    for (int i = 0; i < n; ++i) dist(i, i) = min(dist(i, i), Extended<T>(T{}));
    if (next_hop) {
        *next_hop = Grid<int>(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) (*next_hop)(i, j) = j;
    }
    std::uint64_t work = 0;
    for (int k = 0; k < n; ++k) {
        const auto* krow = dist.row(k);
        for (int i = 0; i < n; ++i) {
            const Extended<T> dik = dist(i, k);
            if (dik.is_pos_inf()) continue;
            auto* irow = dist.row(i);
            work += static_cast<std::uint64_t>(n);
            for (int j = 0; j < n; ++j) {
                if (krow[j].is_pos_inf()) continue;
                Extended<T> cand = dik + krow[j];
                if (cand < irow[j]) {
                    irow[j] = cand;
                    if (next_hop) (*next_hop)(i, j) = (*next_hop)(i, k);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            if (dist(i, i) < Extended<T>(T{}))
                throw Error(ErrorKind::NegativeCycleDetected,
                            "negative cycle through vertex " + std::to_string(i));
        }
    }
    if (counters) {
        counters->fw_inner_ops += work;
        ++counters->fw_runs;
    }
    return dist;
}

namespace {

template <typename T>
CostMatrix<T> clamp_diagonal(const CostMatrix<T>& d) {
    CostMatrix<T> base = d;
    for (int i = 0; i < base.rows(); ++i) base(i, i) = min(base(i, i), Extended<T>(T{}));
    return base;
}

}  // namespace

template <typename T>
CostMatrix<T> minplus_power(const CostMatrix<T>& d, std::uint64_t k, OpCounters* counters) {
    if (d.rows() != d.cols())
        throw Error(ErrorKind::DimensionMismatch, "min-plus power expects a square matrix");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "hop bound must be at least 1");
    CostMatrix<T> base = clamp_diagonal(d);
    int msb = 63;
    while (!(k >> msb & 1)) --msb;
    CostMatrix<T> result = base;
    for (int bit = msb - 1; bit >= 0; --bit) {
        result = minplus_product(result, result, nullptr, counters);
        if (k >> bit & 1) result = minplus_product(result, base, nullptr, counters);
    }
    return result;
}

void PowerTrace::expand(int node, int i, int j, std::vector<std::pair<int, int>>& out) const {
    const Node& nd = nodes[static_cast<size_t>(node)];
    if (nd.left < 0) {
        if (i != j) out.emplace_back(i, j);
        return;
    }
    int k = nd.via(i, j);
    assert(k >= 0);
    expand(nd.left, i, k, out);
    expand(nd.right, k, j, out);
}

template <typename T>
CostMatrix<T> minplus_power_traced(const CostMatrix<T>& d, std::uint64_t k, PowerTrace& trace,
                                   OpCounters* counters) {
    if (d.rows() != d.cols())
        throw Error(ErrorKind::DimensionMismatch, "min-plus power expects a square matrix");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "hop bound must be at least 1");
    trace.nodes.clear();
    trace.nodes.push_back({});  // node 0: the clamped base, one hop per entry
    CostMatrix<T> base = clamp_diagonal(d);
    int msb = 63;
    while (!(k >> msb & 1)) --msb;
    CostMatrix<T> result = base;
    int root = 0;
    for (int bit = msb - 1; bit >= 0; --bit) {
        PowerTrace::Node sq;
        sq.left = sq.right = root;
        result = minplus_product(result, result, &sq.via, counters);
        trace.nodes.push_back(std::move(sq));
        root = static_cast<int>(trace.nodes.size()) - 1;
        if (k >> bit & 1) {
            PowerTrace::Node mul;
            mul.left = root;
            mul.right = 0;
            result = minplus_product(result, base, &mul.via, counters);
            trace.nodes.push_back(std::move(mul));
            root = static_cast<int>(trace.nodes.size()) - 1;
        }
    }
    trace.root = root;
    return result;
}

template <typename T>
CostMatrix<T> minplus_identity(int n) {
    CostMatrix<T> id(n, n, Extended<T>::pos_inf());
    for (int i = 0; i < n; ++i) id(i, i) = Extended<T>(T{});
    return id;
}

template CostMatrix<long long> minplus_product(const CostMatrix<long long>&,
                                               const CostMatrix<long long>&, Grid<int>*,
                                               OpCounters*);
template CostMatrix<double> minplus_product(const CostMatrix<double>&, const CostMatrix<double>&,
                                            Grid<int>*, OpCounters*);
template CostMatrix<long long> minplus_vector_product(const CostMatrix<long long>&,
                                                      const CostMatrix<long long>&, Grid<int>*,
                                                      OpCounters*);
template CostMatrix<double> minplus_vector_product(const CostMatrix<double>&,
                                                   const CostMatrix<double>&, Grid<int>*,
                                                   OpCounters*);
template CostMatrix<long long> floyd_warshall(const CostMatrix<long long>&, Grid<int>*,
                                              OpCounters*);
template CostMatrix<double> floyd_warshall(const CostMatrix<double>&, Grid<int>*, OpCounters*);
template CostMatrix<long long> minplus_power(const CostMatrix<long long>&, std::uint64_t,
                                             OpCounters*);
template CostMatrix<double> minplus_power(const CostMatrix<double>&, std::uint64_t, OpCounters*);
template CostMatrix<long long> minplus_power_traced(const CostMatrix<long long>&, std::uint64_t,
                                                    PowerTrace&, OpCounters*);
template CostMatrix<double> minplus_power_traced(const CostMatrix<double>&, std::uint64_t,
                                                 PowerTrace&, OpCounters*);
template CostMatrix<long long> minplus_identity<long long>(int);
template CostMatrix<double> minplus_identity<double>(int);

}  // namespace evplan
