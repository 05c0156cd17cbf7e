#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bowtie/rational.hpp"

namespace bowtie {

using EdgeId = std::int32_t;

// t-linear r-uniform hypergraph on vertices 0..n-1. Edges are stored sorted;
// edge identity is the sorted vertex tuple. t = 2 is the plain "linear" case:
// no two distinct edges share more than one vertex. Isolated vertices are
// permitted and counted in n.
struct LinearHypergraph {
    int n = 0;
    int r = 2;
    int t = 2;
    std::vector<std::vector<int>> edges;

    long long edge_count() const { return static_cast<long long>(edges.size()); }
    const std::vector<int>& edge(EdgeId id) const { return edges[static_cast<size_t>(id)]; }

    // Sorts every edge in place; call after filling `edges` by hand.
    void normalize();
};

struct ValidationReport {
    enum class Kind {
        Ok,
        BadShape,            // n < 0, r < 2 or t < 2
        EdgeSize,            // an edge without exactly r distinct vertices
        VertexRange,         // vertex id outside 0..n-1
        DuplicateEdge,       // identical sorted tuples
        IntersectionTooLarge // a pair sharing >= t vertices
    };

    Kind kind = Kind::Ok;
    EdgeId edge_a = -1;
    EdgeId edge_b = -1;
    int intersection_size = 0;
    std::string message;

    bool ok() const { return kind == Kind::Ok; }
};

// Total check of all invariants. Reports the first offense in scan order:
// shape, per-edge form, then pairwise intersections (edge ids ascending).
ValidationReport validate(const LinearHypergraph& g);

// Throws ValidationError when validate(g) fails.
void require_valid(const LinearHypergraph& g);

// |e ∩ f| for two sorted vertex lists.
int intersection_size(const std::vector<int>& a, const std::vector<int>& b);

// Per-vertex lists of incident edge ids.
std::vector<std::vector<EdgeId>> incidence_index(const LinearHypergraph& g);

// Per-vertex degrees.
std::vector<int> degree_sequence(const LinearHypergraph& g);

// Exact t-linear density e(G)·C(r,t)/C(n,t); requires n >= r >= t.
Rational linear_density(const LinearHypergraph& g);

// The 2-graph obtained by replacing each edge with a clique on its vertices.
// Only defined for t = 2, where each vertex pair is covered by at most one
// edge.
struct UnderlyingGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;                  // sorted neighbor lists
    std::unordered_map<std::uint64_t, EdgeId> pair_cover; // (u<v) -> covering edge

    long long edge_count() const { return static_cast<long long>(pair_cover.size()); }
    bool adjacent(int u, int v) const;
    // -1 when the pair is not covered.
    EdgeId covering_edge(int u, int v) const;
};

UnderlyingGraph underlying_graph(const LinearHypergraph& g);

struct TriangleCounts {
    long long within = 0; // all three sides inside one edge of G: C(r,3)·e(G)
    long long across = 0; // three sides in three distinct edges of G
    long long total() const { return within + across; }
};

// Classifies every triangle of U(G) by the covering edges of its sides.
// Linearity rules out the mixed case, so within + across is the full census.
TriangleCounts count_triangles_underlying(const LinearHypergraph& g);

// Maximum-degree vertex (smallest id on ties) and its link: the (r-1)-graph
// of edges through v with v removed, relabeled onto the remaining n-1
// vertices. The link is (t-1)-linear with density at least d_t(g).
struct LinkReduction {
    int vertex = -1;
    int degree = 0;
    LinearHypergraph link;
};

LinkReduction link_reduce(const LinearHypergraph& g);

// Places the given instances side by side on a disjoint vertex set. All parts
// must share r and t.
LinearHypergraph disjoint_union(const std::vector<LinearHypergraph>& parts);

} // namespace bowtie
