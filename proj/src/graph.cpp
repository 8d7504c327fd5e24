#include "imcert/graph.hpp"

#include <algorithm>
#include <sstream>

#include "imcert/errors.hpp"

namespace imcert {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> list) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto& [u, v] : list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw InputError("parallel edge");

    Graph g;
    g.n = n;
    g.edges = std::move(list);
    g.inc.assign(n, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        g.inc[g.edges[e].first].push_back(e);
        g.inc[g.edges[e].second].push_back(e);
    }
    for (int u = 0; u < n; ++u)
        g.max_degree = std::max(g.max_degree, g.degree(u));
    return g;
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it != edges.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges.begin());
    return -1;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    out.reserve(inc[u].size());
    for (int e : inc[u]) out.push_back(other_end(e, u));
    std::sort(out.begin(), out.end());
    return out;
}

void Graph::require_vertex(int u) const {
    if (u < 0 || u >= n) throw InputError("invalid vertex id " + std::to_string(u));
}

void Graph::require_edge(int e) const {
    if (e < 0 || e >= edge_count())
        throw InputError("invalid edge id " + std::to_string(e));
}

static std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> edge_closed_neighborhood(const Graph& g, int e) {
    g.require_edge(e);
    auto [u, v] = g.edge(e);
    std::vector<int> out = g.inc[u];
    out.insert(out.end(), g.inc[v].begin(), g.inc[v].end());
    return sorted_unique(std::move(out));
}

std::vector<int> conflict_set(const Graph& g, int e) {
    g.require_edge(e);
    auto [u, v] = g.edge(e);
    std::vector<int> verts{u, v};
    for (int w : g.neighbors(u)) verts.push_back(w);
    for (int w : g.neighbors(v)) verts.push_back(w);
    verts = sorted_unique(std::move(verts));
    std::vector<int> out;
    for (int w : verts) out.insert(out.end(), g.inc[w].begin(), g.inc[w].end());
    return sorted_unique(std::move(out));
}

bool is_induced_matching(const Graph& g, const std::vector<int>& members) {
    std::vector<char> in(g.edge_count(), 0);
    for (int e : members) {
        g.require_edge(e);
        in[e] = 1;
    }
    // |delta_G(e) ^ M| <= 1 for every edge e of G
    for (int e = 0; e < g.edge_count(); ++e) {
        int count = 0;
        for (int f : edge_closed_neighborhood(g, e))
            if (in[f] && ++count > 1) return false;
    }
    return true;
}

bool is_induced_matching(const Graph& g, const InducedMatching& m) {
    return is_induced_matching(g, m.edges);
}

EdgeDeletion delete_edges(const Graph& g, const std::vector<int>& eids) {
    std::vector<char> gone(g.edge_count(), 0);
    for (int e : eids) {
        g.require_edge(e);
        gone[e] = 1;
    }
    EdgeDeletion out;
    out.edge_map.assign(g.edge_count(), -1);
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (gone[e]) continue;
        out.edge_map[e] = static_cast<int>(kept.size());
        out.kept_edges.push_back(e);
        kept.push_back(g.edge(e));
    }
    out.graph = Graph::from_edges(g.n, std::move(kept));
    return out;
}

EdgeDeletion remove_conflict_edges(const Graph& g, int e) {
    return delete_edges(g, conflict_set(g, e));
}

VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& to_delete) {
    std::vector<char> gone(g.n, 0);
    for (int u : to_delete) {
        g.require_vertex(u);
        gone[u] = 1;
    }
    VertexDeletion out;
    out.vertex_map.assign(g.n, -1);
    for (int u = 0; u < g.n; ++u) {
        if (gone[u]) continue;
        out.vertex_map[u] = static_cast<int>(out.kept_vertices.size());
        out.kept_vertices.push_back(u);
    }
    out.edge_map.assign(g.edge_count(), -1);
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (gone[u] || gone[v]) continue;
        out.edge_map[e] = static_cast<int>(kept.size());
        out.kept_edges.push_back(e);
        kept.emplace_back(out.vertex_map[u], out.vertex_map[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.kept_vertices.size()), std::move(kept));
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int e : g.inc[u]) {
                int w = g.other_end(e, u);
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> list;
    long max_seen = -1;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank / comment-only
        if (first == "p") {
            if (header_seen || !list.empty())
                throw ParseError(ParseErrorKind::malformed_line, line_no,
                                 "header not at start");
            std::string rest;
            if (!(ls >> n >> m) || (ls >> rest) || n < 0 || m < 0)
                throw ParseError(ParseErrorKind::malformed_line, line_no,
                                 "malformed header");
            header_seen = true;
            continue;
        }
        long u = -1, v = -1;
        std::string rest;
        size_t used = 0;
        try {
            u = std::stol(first, &used);
        } catch (...) {
            used = 0;
        }
        if (used != first.size())
            throw ParseError(ParseErrorKind::malformed_line, line_no,
                             "expected vertex index");
        if (!(ls >> v) || (ls >> rest))
            throw ParseError(ParseErrorKind::malformed_line, line_no,
                             "expected 'u v'");
        if (u < 0 || v < 0 || (header_seen && (u >= n || v >= n)))
            throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                             "vertex index out of range");
        if (u == v)
            throw ParseError(ParseErrorKind::loop, line_no, "loop edge");
        max_seen = std::max({max_seen, u, v});
        list.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!header_seen) n = max_seen + 1;
    if (header_seen && m != static_cast<long>(list.size()))
        throw ParseError(ParseErrorKind::malformed_line, 0,
                         "edge count does not match header");
    for (auto& [u, v] : list)
        if (u > v) std::swap(u, v);
    auto sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(ParseErrorKind::duplicate_edge, 0, "duplicate edge");
    return Graph::from_edges(static_cast<int>(n), std::move(list));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace imcert
