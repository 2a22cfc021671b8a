#include "evplan/plan.hpp"

#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "evplan/errors.hpp"

namespace evplan {

namespace {

template <typename T>
std::string scalar_str(T v) {
    if constexpr (std::is_integral_v<T>) {
        return std::to_string(v);
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
}

}  // namespace

template <typename T>
T validate_plan(const Graph<T>& g, T initial_charge, const TravelPlan<T>& plan, T tol) {
    if (plan.states.empty())
        throw Error(ErrorKind::InvalidArgument, "plan has no states");
    if (plan.steps.size() + 1 != plan.states.size())
        throw Error(ErrorKind::InvalidArgument, "plan step/state count mismatch");
    if (initial_charge < T{} || initial_charge > g.capacity)
        throw Error(ErrorKind::ChargeOutOfRange, "initial charge outside [0, B]");

    auto abs_diff = [](T a, T b) { return a < b ? static_cast<T>(b - a) : static_cast<T>(a - b); };

    if (abs_diff(plan.states[0].charge, initial_charge) > tol)
        throw Error(ErrorKind::ChargeOutOfRange, "first state does not carry the initial charge");

    T cost = T{};
    for (size_t i = 0; i < plan.states.size(); ++i) {
        const auto& st = plan.states[i];
        if (st.vertex < 0 || st.vertex >= g.num_vertices)
            throw Error(ErrorKind::InvalidArgument, "plan state vertex out of range");
        if (st.charge < -tol || st.charge > g.capacity + tol)
            throw Error(ErrorKind::ChargeOutOfRange,
                        "charge " + scalar_str(st.charge) + " outside [0, B] at state " +
                            std::to_string(i));
    }

    for (size_t i = 0; i < plan.steps.size(); ++i) {
        const auto& cur = plan.states[i];
        const auto& nxt = plan.states[i + 1];
        if (plan.steps[i] == TravelPlan<T>::StepKind::Recharge) {
            if (cur.vertex != nxt.vertex)
                throw Error(ErrorKind::IllegalRecharge, "recharge changes vertex at step " +
                                                            std::to_string(i));
            if (!(nxt.charge > cur.charge))
                throw Error(ErrorKind::IllegalRecharge,
                            "charge not strictly increasing at step " + std::to_string(i));
            const auto& price = g.price[static_cast<size_t>(cur.vertex)];
            if (!price.is_finite())
                throw Error(ErrorKind::IllegalRecharge, "no charging at vertex " +
                                                            std::to_string(cur.vertex));
            cost += sat_mul_nonneg<T>(price.value(), nxt.charge - cur.charge);
        } else {
            bool found = false;
            for (const auto& a : g.arcs) {
                if (a.tail != cur.vertex || a.head != nxt.vertex) continue;
                if (cur.charge < a.cost - tol) continue;
                T expect =
                    std::min((Extended<T>(cur.charge) - Extended<T>(a.cost)).value(), g.capacity);
                if (abs_diff(nxt.charge, expect) <= tol) {
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error(ErrorKind::IllegalTraversal,
                            "no matching traversable arc " + std::to_string(cur.vertex) + "->" +
                                std::to_string(nxt.vertex) + " at step " + std::to_string(i));
        }
    }

    if (abs_diff(cost, plan.total_cost) > tol)
        throw Error(ErrorKind::InvalidArgument,
                    "stated plan cost " + scalar_str(plan.total_cost) +
                        " does not match recomputed " + scalar_str(cost));
    return cost;
}

template <typename T>
bool has_boundary_normal_form(const TravelPlan<T>& plan, T capacity, T tol) {
    auto at_boundary = [&](T c) {
        T lo = c < T{} ? static_cast<T>(-c) : c;
        T hi = c < capacity ? static_cast<T>(capacity - c) : static_cast<T>(c - capacity);
        return lo <= tol || hi <= tol;
    };
    long long prev_recharge = -1;
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        if (plan.steps[i] != TravelPlan<T>::StepKind::Recharge) continue;
        if (prev_recharge >= 0) {
            bool ok = false;
            for (size_t j = static_cast<size_t>(prev_recharge) + 1; j <= i && !ok; ++j) {
                ok = at_boundary(plan.states[j].charge);
            }
            if (!ok) return false;
        }
        prev_recharge = static_cast<long long>(i);
    }
    return true;
}

template <typename T>
std::string format_plan(const TravelPlan<T>& plan) {
    std::ostringstream out;
    out << "plan " << plan.states.size() << ' ' << scalar_str(plan.total_cost) << '\n';
    for (size_t i = 0; i < plan.states.size(); ++i) {
        out << plan.states[i].vertex << ' ' << scalar_str(plan.states[i].charge);
        if (i > 0) {
            out << ' '
                << (plan.steps[i - 1] == TravelPlan<T>::StepKind::Recharge ? "charge" : "move");
        }
        out << '\n';
    }
    return out.str();
}

namespace {

template <typename T>
T parse_plan_scalar(const std::string& tok, int line) {
    errno = 0;
    char* end = nullptr;
    if constexpr (std::is_integral_v<T>) {
        long long v = std::strtoll(tok.c_str(), &end, 10);
        if (errno != 0 || end != tok.c_str() + tok.size() || tok.empty())
            throw ParseError(line, "expected integer, got '" + tok + "'");
        return v;
    } else {
        double v = std::strtod(tok.c_str(), &end);
        if (errno != 0 || end != tok.c_str() + tok.size() || tok.empty() || !std::isfinite(v))
            throw ParseError(line, "expected number, got '" + tok + "'");
        return v;
    }
}

}  // namespace

template <typename T>
TravelPlan<T> parse_plan(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    TravelPlan<T> plan;
    bool header_seen = false;
    size_t expect_states = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (!header_seen) {
            if (toks.size() != 3 || toks[0] != "plan")
                throw ParseError(line_no, "expected 'plan <num_states> <total_cost>'");
            long long n = std::strtoll(toks[1].c_str(), nullptr, 10);
            if (n <= 0) throw ParseError(line_no, "plan must have at least one state");
            expect_states = static_cast<size_t>(n);
            plan.total_cost = parse_plan_scalar<T>(toks[2], line_no);
            header_seen = true;
            continue;
        }
        if (plan.states.size() >= expect_states)
            throw ParseError(line_no, "more states than declared");
        bool first = plan.states.empty();
        if (toks.size() != (first ? 2u : 3u))
            throw ParseError(line_no, first ? "expected '<vertex> <charge>'"
                                            : "expected '<vertex> <charge> move|charge'");
        int vertex = static_cast<int>(parse_plan_scalar<long long>(toks[0], line_no));
        T charge = parse_plan_scalar<T>(toks[1], line_no);
        if (!first) {
            if (toks[2] == "move") {
                plan.steps.push_back(TravelPlan<T>::StepKind::Traverse);
            } else if (toks[2] == "charge") {
                plan.steps.push_back(TravelPlan<T>::StepKind::Recharge);
            } else {
                throw ParseError(line_no, "step must be 'move' or 'charge'");
            }
        }
        plan.states.push_back({vertex, charge});
    }
    if (!header_seen) throw ParseError(line_no ? line_no : 1, "missing plan header");
    if (plan.states.size() != expect_states)
        throw ParseError(line_no, "fewer states than declared");
    return plan;
}

template long long validate_plan(const Graph<long long>&, long long, const TravelPlan<long long>&,
                                 long long);
template double validate_plan(const Graph<double>&, double, const TravelPlan<double>&, double);
template bool has_boundary_normal_form(const TravelPlan<long long>&, long long, long long);
template bool has_boundary_normal_form(const TravelPlan<double>&, double, double);
template std::string format_plan(const TravelPlan<long long>&);
template std::string format_plan(const TravelPlan<double>&);
template TravelPlan<long long> parse_plan(const std::string&);
template TravelPlan<double> parse_plan(const std::string&);

}  // namespace evplan
