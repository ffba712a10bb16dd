#include "pursuit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pursuit {

const char* family_name(Family f) {
    switch (f) {
        case Family::cayley: return "cayley";
        case Family::cayley_sum: return "cayley-sum";
        case Family::twisted_cayley: return "twisted-cayley";
        case Family::twisted_cayley_sum: return "twisted-cayley-sum";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "cayley") return Family::cayley;
    if (name == "cayley-sum") return Family::cayley_sum;
    if (name == "twisted-cayley") return Family::twisted_cayley;
    if (name == "twisted-cayley-sum") return Family::twisted_cayley_sum;
    throw ParseError("unknown graph family: " + name);
}

bool AlgebraicGraph::has_edge(int u, int v) const {
    const auto& row = adjacency[u];
    return std::binary_search(row.begin(), row.end(), v);
}

Elem AlgebraicGraph::move_target(Elem u, Elem s) const {
    const Group& g = *group;
    switch (family) {
        case Family::cayley: return g.compose(u, s);
        case Family::cayley_sum: return g.compose(g.inverse(u), s);
        case Family::twisted_cayley: return sigma->apply(g.compose(u, s));
        case Family::twisted_cayley_sum: return sigma->apply(g.compose(g.inverse(u), s));
    }
    return -1;
}

std::string AlgebraicGraph::describe() const {
    std::string out = std::string(family_name(family)) + " " + group->name() + " S={" + join(genset.members, ",") + "}";
    if (sigma) out += " sigma=[" + join(sigma->images(), " ") + "]";
    return out;
}

std::string AlgebraicGraph::instance_hash() const { return hex_hash(fnv1a(describe())); }

AlgebraicGraph build_graph(Family family, GroupPtr group, GenSet genset, std::optional<Automorphism> sigma) {
    bool twisted = family == Family::twisted_cayley || family == Family::twisted_cayley_sum;
    if (twisted && !sigma)
        throw ValidationError(std::string(family_name(family)) + " needs an automorphism");
    if (!twisted && sigma)
        throw ValidationError(std::string(family_name(family)) + " takes no automorphism");
    if (twisted && sigma->order() > 2)
        throw ValidationError("twisted families need sigma of order 1 or 2, got order " +
                              std::to_string(sigma->order()));
    if (genset.group.get() != group.get())
        throw ValidationError("generating set belongs to a different group");

    AlgebraicGraph g{family, std::move(group), std::move(genset), std::move(sigma), {}, false, {}};
    int n = g.group->order();
    g.adjacency.assign(n, {});
    for (Elem u = 0; u < n; ++u) {
        auto& row = g.adjacency[u];
        for (Elem s : g.genset.members) row.push_back(g.move_target(u, s));
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        if (std::binary_search(row.begin(), row.end(), u)) g.loops.push_back(u);
    }
    g.undirected = adjacency_is_undirected(g.adjacency);
    return g;
}

UndirectednessCheck check_undirected_criterion(const AlgebraicGraph& g) {
    const Group& grp = *g.group;
    UndirectednessCheck out{};
    switch (g.family) {
        case Family::cayley:
            out.predicted = is_symmetric(g.genset);
            out.criterion = "S symmetric";
            break;
        case Family::cayley_sum:
            out.predicted = is_conjugation_closed(g.genset);
            out.criterion = "S closed under conjugation";
            break;
        case Family::twisted_cayley: {
            // S contains sigma(s^-1 g^-1) sigma^-1(g) for all s in S, g in G
            out.predicted = true;
            for (Elem s : g.genset.members) {
                for (Elem u = 0; u < grp.order() && out.predicted; ++u) {
                    Elem lhs = g.sigma->apply(grp.compose(grp.inverse(s), grp.inverse(u)));
                    Elem val = grp.compose(lhs, g.sigma->apply_inverse(u));
                    if (!g.genset.contains(val)) out.predicted = false;
                }
                if (!out.predicted) break;
            }
            out.criterion = "S contains sigma(s^-1 g^-1) sigma^-1(g)";
            break;
        }
        case Family::twisted_cayley_sum: {
            // S contains sigma^2(g) sigma(s) g^-1 for all s in S, g in G
            out.predicted = true;
            for (Elem s : g.genset.members) {
                for (Elem u = 0; u < grp.order() && out.predicted; ++u) {
                    Elem val = grp.compose(grp.compose(g.sigma->apply_squared(u), g.sigma->apply(s)),
                                           grp.inverse(u));
                    if (!g.genset.contains(val)) out.predicted = false;
                }
                if (!out.predicted) break;
            }
            out.criterion = "S contains sigma^2(g) sigma(s) g^-1";
            break;
        }
    }
    out.observed = g.undirected;
    out.agree = out.predicted == out.observed;
    return out;
}

bool adjacency_is_undirected(const Adjacency& adj) {
    int n = static_cast<int>(adj.size());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (!std::binary_search(adj[v].begin(), adj[v].end(), u)) return false;
    return true;
}

bool adjacency_connected(const Adjacency& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push_back(v);
            }
    }
    return count == n;
}

bool adjacency_strongly_connected(const Adjacency& adj) {
    if (!adjacency_connected(adj)) return false;
    int n = static_cast<int>(adj.size());
    Adjacency rev(n);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) rev[v].push_back(u);
    return adjacency_connected(rev);
}

bool is_connected(const AlgebraicGraph& g, Connectivity mode) {
    if (!g.undirected) {
        if (mode != Connectivity::strong)
            throw ValidationError("graph is directed; request the strong-connectivity variant");
        return adjacency_strongly_connected(g.adjacency);
    }
    return adjacency_connected(g.adjacency);
}

ExportFormat export_format_from_name(const std::string& name) {
    if (name == "edge-list") return ExportFormat::edge_list;
    if (name == "adjacency-json") return ExportFormat::adjacency_json;
    if (name == "dot") return ExportFormat::dot;
    throw ParseError("unknown export format: " + name);
}

std::string adjacency_to_edge_list(const Adjacency& adj, bool undirected) {
    std::ostringstream os;
    int n = static_cast<int>(adj.size());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) {
            if (undirected && v < u) continue;  // emit each undirected edge once
            os << u << ' ' << v << "\n";
        }
    return os.str();
}

std::string export_graph(const AlgebraicGraph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::edge_list:
            return adjacency_to_edge_list(g.adjacency, g.undirected);
        case ExportFormat::adjacency_json: {
            std::ostringstream os;
            os << "{\"family\":\"" << family_name(g.family) << "\",\"n\":" << g.size()
               << ",\"undirected\":" << (g.undirected ? "true" : "false") << ",\"adjacency\":[";
            for (int u = 0; u < g.size(); ++u) {
                if (u) os << ',';
                os << '[';
                for (std::size_t i = 0; i < g.adjacency[u].size(); ++i) {
                    if (i) os << ',';
                    os << g.adjacency[u][i];
                }
                os << ']';
            }
            os << "]}";
            return os.str();
        }
        case ExportFormat::dot: {
            std::ostringstream os;
            os << (g.undirected ? "graph" : "digraph") << " G {\n";
            for (int u = 0; u < g.size(); ++u) os << "  " << u << ";\n";
            const char* arrow = g.undirected ? " -- " : " -> ";
            for (int u = 0; u < g.size(); ++u)
                for (int v : g.adjacency[u]) {
                    if (g.undirected && v < u) continue;
                    os << "  " << u << arrow << v << ";\n";
                }
            os << "}\n";
            return os.str();
        }
    }
    throw ParseError("unknown export format");
}

Adjacency adjacency_from_edge_list(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream row(line);
        int u, v;
        if (!(row >> u)) continue;
        if (!(row >> v)) throw ParseError("edge list: line with a single endpoint: " + line);
        if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id");
        edges.push_back({u, v});
        max_v = std::max({max_v, u, v});
    }
    if (max_v < 0) throw ParseError("edge list: no edges");
    Adjacency adj(max_v + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        if (u != v) adj[v].push_back(u);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

std::vector<int> bfs_distances(const Adjacency& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

}  // namespace pursuit
