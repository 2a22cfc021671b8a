#include "evplan/graph.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "evplan/errors.hpp"

namespace evplan {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IllegalTraversal: return "IllegalTraversal";
    case ErrorKind::IllegalRecharge: return "IllegalRecharge";
    case ErrorKind::ChargeOutOfRange: return "ChargeOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeCycleDetected: return "NegativeCycleDetected";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::WitnessUnavailable: return "WitnessUnavailable";
    }
    return "Error";
}

template <typename T>
Graph<T> reverse(const Graph<T>& g) {
    Graph<T> r;
    r.num_vertices = g.num_vertices;
    r.price = g.price;
    r.capacity = g.capacity;
    r.arcs.reserve(g.arcs.size());
    for (const auto& a : g.arcs) r.arcs.push_back({a.head, a.tail, a.cost});
    return r;
}

template <typename T>
void check_graph(const Graph<T>& g) {
    if (g.num_vertices <= 0)
        throw Error(ErrorKind::InvalidArgument, "graph must have at least one vertex");
    if (static_cast<int>(g.price.size()) != g.num_vertices)
        throw Error(ErrorKind::InvalidArgument, "price vector size does not match vertex count");
    if (g.capacity < T{})
        throw Error(ErrorKind::InvalidArgument, "battery capacity must be non-negative");
    for (const auto& p : g.price) {
        if (p.is_neg_inf() || (p.is_finite() && p.value() < T{}))
            throw Error(ErrorKind::InvalidArgument, "charging prices must be non-negative");
    }
    for (const auto& a : g.arcs) {
        if (a.tail < 0 || a.tail >= g.num_vertices || a.head < 0 || a.head >= g.num_vertices)
            throw Error(ErrorKind::InvalidArgument, "arc endpoint out of range");
    }
}

namespace {

struct TokenLine {
    int line_no;
    std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
    std::vector<TokenLine> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        TokenLine tl{line_no, {}};
        std::string tok;
        while (ls >> tok) tl.tokens.push_back(tok);
        if (!tl.tokens.empty()) out.push_back(std::move(tl));
    }
    return out;
}

long long parse_int_token(const std::string& tok, int line) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(tok.c_str(), &end, 10);
    if (errno != 0 || end != tok.c_str() + tok.size() || tok.empty())
        throw ParseError(line, "expected integer, got '" + tok + "'");
    return v;
}

double parse_real_token(const std::string& tok, int line) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (errno != 0 || end != tok.c_str() + tok.size() || tok.empty() || !std::isfinite(v))
        throw ParseError(line, "expected number, got '" + tok + "'");
    return v;
}

template <typename T>
T parse_scalar_token(const std::string& tok, int line) {
    if constexpr (std::is_integral_v<T>) {
        return parse_int_token(tok, line);
    } else {
        return parse_real_token(tok, line);
    }
}

int parse_id_token(const std::string& tok, int line, int n, const char* what) {
    long long v = parse_int_token(tok, line);
    if (v < 0 || v >= n)
        throw ParseError(line, std::string(what) + " id " + tok + " out of range");
    return static_cast<int>(v);
}

}  // namespace

template <typename T>
Graph<T> parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty graph description");

    size_t at = 0;
    const TokenLine& header = lines[at++];
    if (header.tokens.size() != 3)
        throw ParseError(header.line_no, "expected header 'n m B'");
    long long n = parse_int_token(header.tokens[0], header.line_no);
    long long m = parse_int_token(header.tokens[1], header.line_no);
    T capacity = parse_scalar_token<T>(header.tokens[2], header.line_no);
    if (n <= 0) throw ParseError(header.line_no, "vertex count must be positive");
    if (m < 0) throw ParseError(header.line_no, "arc count must be non-negative");
    if (capacity < T{}) throw ParseError(header.line_no, "battery capacity must be non-negative");

    Graph<T> g;
    g.num_vertices = static_cast<int>(n);
    g.capacity = capacity;
    g.price.assign(static_cast<size_t>(n), Extended<T>::pos_inf());

    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (long long i = 0; i < n; ++i) {
        if (at >= lines.size()) throw ParseError(lines.back().line_no, "missing vertex lines");
        const TokenLine& tl = lines[at++];
        if (tl.tokens.size() != 2)
            throw ParseError(tl.line_no, "expected 'vertex_id price'");
        int id = parse_id_token(tl.tokens[0], tl.line_no, g.num_vertices, "vertex");
        if (seen[static_cast<size_t>(id)])
            throw ParseError(tl.line_no, "duplicate vertex id " + tl.tokens[0]);
        seen[static_cast<size_t>(id)] = true;
        if (tl.tokens[1] == "inf") {
            g.price[static_cast<size_t>(id)] = Extended<T>::pos_inf();
        } else {
            T p = parse_scalar_token<T>(tl.tokens[1], tl.line_no);
            if (p < T{}) throw ParseError(tl.line_no, "price must be non-negative");
            g.price[static_cast<size_t>(id)] = Extended<T>(p);
        }
    }

    g.arcs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (at >= lines.size()) throw ParseError(lines.back().line_no, "missing arc lines");
        const TokenLine& tl = lines[at++];
        if (tl.tokens.size() != 3)
            throw ParseError(tl.line_no, "expected 'tail head cost'");
        int tail = parse_id_token(tl.tokens[0], tl.line_no, g.num_vertices, "tail");
        int head = parse_id_token(tl.tokens[1], tl.line_no, g.num_vertices, "head");
        T cost = parse_scalar_token<T>(tl.tokens[2], tl.line_no);
        g.arcs.push_back({tail, head, cost});
    }

    if (at != lines.size())
        throw ParseError(lines[at].line_no, "unexpected trailing content");
    return g;
}

template <typename T>
std::string format_graph(const Graph<T>& g) {
    std::ostringstream out;
    auto put_scalar = [&out](T v) {
        if constexpr (std::is_integral_v<T>) {
            out << v;
        } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf;
        }
    };
    out << g.num_vertices << ' ' << g.arcs.size() << ' ';
    put_scalar(g.capacity);
    out << '\n';
    for (int v = 0; v < g.num_vertices; ++v) {
        out << v << ' ';
        if (g.price[static_cast<size_t>(v)].is_pos_inf()) {
            out << "inf";
        } else {
            put_scalar(g.price[static_cast<size_t>(v)].value());
        }
        out << '\n';
    }
    for (const auto& a : g.arcs) {
        out << a.tail << ' ' << a.head << ' ';
        put_scalar(a.cost);
        out << '\n';
    }
    return out.str();
}

template <typename T>
bool has_negative_cycle(const Graph<T>& g) {
    // Bellman-Ford from a virtual super-source connected to every vertex.
    std::vector<Extended<T>> dist(static_cast<size_t>(g.num_vertices), Extended<T>(T{}));
    for (int round = 0; round < g.num_vertices; ++round) {
        bool changed = false;
        for (const auto& a : g.arcs) {
            Extended<T> cand = dist[static_cast<size_t>(a.tail)] + Extended<T>(a.cost);
            if (cand < dist[static_cast<size_t>(a.head)]) {
                dist[static_cast<size_t>(a.head)] = cand;
                changed = true;
            }
        }
        if (!changed) return false;
    }
    return true;
}

template Graph<long long> reverse(const Graph<long long>&);
template Graph<double> reverse(const Graph<double>&);
template void check_graph(const Graph<long long>&);
template void check_graph(const Graph<double>&);
template Graph<long long> parse_graph(const std::string&);
template Graph<double> parse_graph(const std::string&);
template std::string format_graph(const Graph<long long>&);
template std::string format_graph(const Graph<double>&);
template bool has_negative_cycle(const Graph<long long>&);
template bool has_negative_cycle(const Graph<double>&);

}  // namespace evplan
