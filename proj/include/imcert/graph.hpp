#pragma once

#include <string>
#include <utility>
#include <vector>

namespace imcert {

// Immutable simple undirected graph with dense vertex ids 0..n-1 and dense
// edge ids 0..m-1. Edges are stored with u < v and sorted lexicographically,
// so edge ids are canonical for a given (n, edge set). Mutating operations
// return new graphs together with old->new id maps.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // id -> (u, v), u < v, sorted
    std::vector<std::vector<int>> inc;       // vertex -> sorted incident edge ids
    int max_degree = 0;

    // Validates simplicity (no loops, no parallel edges, ids in range),
    // normalizes endpoint order, sorts edges.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> list);

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int u) const { return static_cast<int>(inc[u].size()); }

    const std::pair<int, int>& edge(int e) const { return edges[e]; }
    int other_end(int e, int u) const {
        return edges[e].first == u ? edges[e].second : edges[e].first;
    }

    // -1 if absent
    int edge_id(int u, int v) const;

    std::vector<int> neighbors(int u) const;

    void require_vertex(int u) const;
    void require_edge(int e) const;
};

// delta_G(e): edges sharing an endpoint with e, including e itself. Sorted.
std::vector<int> edge_closed_neighborhood(const Graph& g, int e);

// C_G(e) for e = uv: all edges incident with N[u] u N[v]. Superset of the
// closed neighborhood; an edge outside C_G(e) can join e in an induced
// matching. Sorted.
std::vector<int> conflict_set(const Graph& g, int e);

struct InducedMatching {
    std::vector<int> edges;  // sorted edge ids
    int size() const { return static_cast<int>(edges.size()); }
};

// True iff every edge of g has at most one member of `members` in its closed
// edge neighborhood (the definitional check; the pairwise conflict-set check
// is equivalent and exercised against this one in the tests).
bool is_induced_matching(const Graph& g, const std::vector<int>& members);
bool is_induced_matching(const Graph& g, const InducedMatching& m);

struct EdgeDeletion {
    Graph graph;                 // same vertex set
    std::vector<int> edge_map;   // old edge id -> new id, -1 if deleted
    std::vector<int> kept_edges; // new edge id -> old id
};

// G - C_G(e): deletes the conflict set of e, keeps all vertices.
EdgeDeletion remove_conflict_edges(const Graph& g, int e);

EdgeDeletion delete_edges(const Graph& g, const std::vector<int>& eids);

struct VertexDeletion {
    Graph graph;
    std::vector<int> vertex_map;    // old vertex -> new id, -1 if deleted
    std::vector<int> edge_map;      // old edge -> new id, -1 if deleted
    std::vector<int> kept_vertices; // new -> old
    std::vector<int> kept_edges;    // new -> old
};

// Induced subgraph on V(g) minus the given set; remaps are monotone in the
// old ids, so relative order (and hence determinism) is preserved.
VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& to_delete);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Edge-list text format. Optional header "p <n> <m>", then "u v" lines,
// 0-based, '#' starts a comment. Canonical form (emitted by serialize):
// header present, edges sorted with u < v, LF endings.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace imcert
