#include "bowtie/hypergraph.hpp"

#include <algorithm>

#include "bowtie/errors.hpp"
#include "bowtie/util.hpp"

namespace bowtie {

void LinearHypergraph::normalize() {
    for (auto& e : edges) std::sort(e.begin(), e.end());
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

namespace {

ValidationReport report_pair(ValidationReport::Kind kind, EdgeId a, EdgeId b, int inter,
                             std::string msg) {
    ValidationReport rep;
    rep.kind = kind;
    rep.edge_a = a;
    rep.edge_b = b;
    rep.intersection_size = inter;
    rep.message = std::move(msg);
    return rep;
}

} // namespace

ValidationReport validate(const LinearHypergraph& g) {
    ValidationReport rep;
    if (g.n < 0 || g.r < 2 || g.t < 2) {
        rep.kind = ValidationReport::Kind::BadShape;
        rep.message = "need n >= 0, r >= 2, t >= 2 (got n=" + std::to_string(g.n) +
                      " r=" + std::to_string(g.r) + " t=" + std::to_string(g.t) + ")";
        return rep;
    }
    const long long m = g.edge_count();
    for (long long i = 0; i < m; ++i) {
        const auto& e = g.edges[static_cast<size_t>(i)];
        if (static_cast<int>(e.size()) != g.r)
            return report_pair(ValidationReport::Kind::EdgeSize, static_cast<EdgeId>(i), -1, 0,
                               "edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                                   " vertices, expected " + std::to_string(g.r));
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= g.n)
                return report_pair(ValidationReport::Kind::VertexRange, static_cast<EdgeId>(i), -1,
                                   0,
                                   "edge " + std::to_string(i) + " has vertex " +
                                       std::to_string(e[j]) + " outside 0.." +
                                       std::to_string(g.n - 1));
            if (j > 0 && e[j] == e[j - 1])
                return report_pair(ValidationReport::Kind::EdgeSize, static_cast<EdgeId>(i), -1, 0,
                                   "edge " + std::to_string(i) + " repeats vertex " +
                                       std::to_string(e[j]));
            if (j > 0 && e[j] < e[j - 1])
                return report_pair(ValidationReport::Kind::EdgeSize, static_cast<EdgeId>(i), -1, 0,
                                   "edge " + std::to_string(i) + " is not sorted");
        }
    }

    // Duplicate edges, reported against the earlier copy.
    {
        std::unordered_map<std::uint64_t, std::vector<EdgeId>> by_hash;
        for (long long i = 0; i < m; ++i) {
            const auto& e = g.edges[static_cast<size_t>(i)];
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (int v : e) {
                h ^= static_cast<std::uint64_t>(v) + 1;
                h *= 0x100000001b3ULL;
            }
            auto& bucket = by_hash[h];
            for (EdgeId other : bucket)
                if (g.edges[static_cast<size_t>(other)] == e)
                    return report_pair(ValidationReport::Kind::DuplicateEdge, other,
                                       static_cast<EdgeId>(i), g.r,
                                       "edges " + std::to_string(other) + " and " +
                                           std::to_string(i) + " are identical");
            bucket.push_back(static_cast<EdgeId>(i));
        }
    }

    if (g.t == 2) {
        // Pair-cover index: a pair covered twice is exactly an intersection of
        // size >= 2. Scan order: edge ids ascending, pairs within an edge in
        // sorted order, so the reported pair has the smallest second edge id.
        std::unordered_map<std::uint64_t, EdgeId> cover;
        cover.reserve(static_cast<size_t>(m) * static_cast<size_t>(g.r) * (g.r - 1) / 2);
        for (long long i = 0; i < m; ++i) {
            const auto& e = g.edges[static_cast<size_t>(i)];
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b) {
                    auto [it, inserted] = cover.emplace(pair_key(e[a], e[b]),
                                                        static_cast<EdgeId>(i));
                    if (!inserted) {
                        EdgeId first = it->second;
                        int inter = intersection_size(g.edges[static_cast<size_t>(first)], e);
                        return report_pair(
                            ValidationReport::Kind::IntersectionTooLarge, first,
                            static_cast<EdgeId>(i), inter,
                            "edges " + std::to_string(first) + " and " + std::to_string(i) +
                                " share " + std::to_string(inter) + " vertices (t=2 allows 1)");
                    }
                }
        }
    } else {
        for (long long i = 0; i < m; ++i)
            for (long long j = i + 1; j < m; ++j) {
                int inter = intersection_size(g.edges[static_cast<size_t>(i)],
                                              g.edges[static_cast<size_t>(j)]);
                if (inter >= g.t)
                    return report_pair(ValidationReport::Kind::IntersectionTooLarge,
                                       static_cast<EdgeId>(i), static_cast<EdgeId>(j), inter,
                                       "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                           " share " + std::to_string(inter) + " vertices (t=" +
                                           std::to_string(g.t) + " allows " +
                                           std::to_string(g.t - 1) + ")");
            }
    }

    rep.message = "ok";
    return rep;
}

void require_valid(const LinearHypergraph& g) {
    ValidationReport rep = validate(g);
    if (!rep.ok()) throw ValidationError("invalid instance: " + rep.message);
}

std::vector<std::vector<EdgeId>> incidence_index(const LinearHypergraph& g) {
    std::vector<std::vector<EdgeId>> inc(static_cast<size_t>(g.n));
    for (long long i = 0; i < g.edge_count(); ++i)
        for (int v : g.edges[static_cast<size_t>(i)])
            inc[static_cast<size_t>(v)].push_back(static_cast<EdgeId>(i));
    return inc;
}

std::vector<int> degree_sequence(const LinearHypergraph& g) {
    std::vector<int> deg(static_cast<size_t>(g.n), 0);
    for (const auto& e : g.edges)
        for (int v : e) ++deg[static_cast<size_t>(v)];
    return deg;
}

Rational linear_density(const LinearHypergraph& g) {
    if (g.n < g.r)
        throw PreconditionError("density needs n >= r (got n=" + std::to_string(g.n) +
                                ", r=" + std::to_string(g.r) + ")");
    if (g.r < g.t)
        throw PreconditionError("density needs r >= t");
    if (g.edges.empty()) return Rational(0);
    return Rational(g.edge_count()) * Rational(binom(g.r, g.t), binom(g.n, g.t));
}

bool UnderlyingGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return pair_cover.count(pair_key(u, v)) != 0;
}

EdgeId UnderlyingGraph::covering_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = pair_cover.find(pair_key(u, v));
    return it == pair_cover.end() ? -1 : it->second;
}

UnderlyingGraph underlying_graph(const LinearHypergraph& g) {
    if (g.t != 2)
        throw PreconditionError("underlying graph is only defined for t=2 "
                                "(pair-cover uniqueness fails for t=" +
                                std::to_string(g.t) + ")");
    require_valid(g);
    UnderlyingGraph u;
    u.n = g.n;
    u.adj.resize(static_cast<size_t>(g.n));
    u.pair_cover.reserve(g.edges.size() * static_cast<size_t>(binom(g.r, 2)));
    for (long long i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges[static_cast<size_t>(i)];
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b) {
                auto [it, inserted] = u.pair_cover.emplace(pair_key(e[a], e[b]),
                                                           static_cast<EdgeId>(i));
                BOWTIE_CHECK_MSG(inserted, "pair covered twice in a valid 2-linear instance");
                u.adj[static_cast<size_t>(e[a])].push_back(e[b]);
                u.adj[static_cast<size_t>(e[b])].push_back(e[a]);
            }
    }
    for (auto& list : u.adj) std::sort(list.begin(), list.end());
    return u;
}

TriangleCounts count_triangles_underlying(const LinearHypergraph& g) {
    UnderlyingGraph u = underlying_graph(g);
    TriangleCounts counts;
    counts.within = binom(g.r, 3) * g.edge_count();

    long long within_seen = 0;
    // One triangle per ordered a < b < c: intersect the above-b neighborhoods
    // of a and b.
    for (int a = 0; a < u.n; ++a) {
        const auto& na = u.adj[static_cast<size_t>(a)];
        for (int b : na) {
            if (b <= a) continue;
            const auto& nb = u.adj[static_cast<size_t>(b)];
            auto ia = std::upper_bound(na.begin(), na.end(), b);
            auto ib = std::upper_bound(nb.begin(), nb.end(), b);
            while (ia != na.end() && ib != nb.end()) {
                if (*ia < *ib) {
                    ++ia;
                } else if (*ia > *ib) {
                    ++ib;
                } else {
                    int c = *ia;
                    EdgeId eab = u.covering_edge(a, b);
                    EdgeId eac = u.covering_edge(a, c);
                    EdgeId ebc = u.covering_edge(b, c);
                    if (eab == eac && eac == ebc) {
                        ++within_seen;
                    } else {
                        // Two equal sides force the third into the same edge,
                        // so a mixed classification cannot occur.
                        BOWTIE_CHECK_MSG(eab != eac && eab != ebc && eac != ebc,
                                         "triangle with exactly two sides in one edge");
                        ++counts.across;
                    }
                    ++ia;
                    ++ib;
                }
            }
        }
    }
    BOWTIE_CHECK_MSG(within_seen == counts.within,
                     "within-edge triangle census disagrees with C(r,3)*e(G)");
    return counts;
}

LinkReduction link_reduce(const LinearHypergraph& g) {
    if (g.t < 3)
        throw PreconditionError("link reduction needs t >= 3; t=2 instances are already linear");
    require_valid(g);
    if (g.edges.empty()) throw PreconditionError("link reduction on an empty instance");

    std::vector<int> deg = degree_sequence(g);
    int v = 0;
    for (int i = 1; i < g.n; ++i)
        if (deg[static_cast<size_t>(i)] > deg[static_cast<size_t>(v)]) v = i;

    LinkReduction out;
    out.vertex = v;
    out.degree = deg[static_cast<size_t>(v)];
    out.link.n = g.n - 1;
    out.link.r = g.r - 1;
    out.link.t = g.t - 1;
    for (const auto& e : g.edges) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        std::vector<int> reduced;
        reduced.reserve(e.size() - 1);
        for (int w : e)
            if (w != v) reduced.push_back(w < v ? w : w - 1);
        out.link.edges.push_back(std::move(reduced));
    }
    return out;
}

LinearHypergraph disjoint_union(const std::vector<LinearHypergraph>& parts) {
    if (parts.empty()) throw PreconditionError("disjoint union of zero parts");
    LinearHypergraph out;
    out.r = parts.front().r;
    out.t = parts.front().t;
    int offset = 0;
    for (const auto& part : parts) {
        if (part.r != out.r || part.t != out.t)
            throw PreconditionError("disjoint union needs matching r and t across parts");
        for (const auto& e : part.edges) {
            std::vector<int> shifted;
            shifted.reserve(e.size());
            for (int v : e) shifted.push_back(v + offset);
            out.edges.push_back(std::move(shifted));
        }
        offset += part.n;
    }
    out.n = offset;
    return out;
}

} // namespace bowtie
