#ifndef MINTRAIL_GRAPH_HPP
#define MINTRAIL_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mintrail {

// Labels are single characters ordered by code point.
using Symbol = char;
using VertexId = std::int32_t;
using ArcId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateOutLabel : Error {
    std::string vertex;
    Symbol label;
    DuplicateOutLabel(std::string v, Symbol l)
        : Error("duplicate out-label '" + std::string(1, l) + "' at vertex '" + v + "'"),
          vertex(std::move(v)),
          label(l) {}
};

struct UnknownVertex : Error {
    using Error::Error;
};

struct Arc {
    VertexId tail;
    VertexId head;
    Symbol label;
    ArcId id;
};

struct ArcTriple {
    std::string tail;
    Symbol label;
    std::string head;
};

// Arc-labeled directed multigraph. Out-arcs of each vertex carry pairwise
// distinct labels and are stored sorted by label, so the minimal unused
// out-arc at a vertex is always the next one behind a per-vertex cursor.
// Immutable after construction; vertex and arc ids are canonical (vertices
// sorted by name, arcs by (tail, label)) so the layout does not depend on
// the input order.
class LabeledDigraph {
public:
    LabeledDigraph() = default;

    static LabeledDigraph from_triples(const std::vector<ArcTriple>& triples) {
        LabeledDigraph g;
        std::map<std::string, VertexId> index;
        for (const auto& t : triples) {
            index.emplace(t.tail, 0);
            index.emplace(t.head, 0);
        }
        g.names_.reserve(index.size());
        for (auto& [name, id] : index) {
            id = static_cast<VertexId>(g.names_.size());
            g.names_.push_back(name);
        }
        const auto n = static_cast<VertexId>(g.names_.size());
        std::vector<std::tuple<VertexId, Symbol, VertexId>> raw;
        raw.reserve(triples.size());
        for (const auto& t : triples)
            raw.emplace_back(index.at(t.tail), t.label, index.at(t.head));
        std::sort(raw.begin(), raw.end());
        g.arcs_.reserve(raw.size());
        g.in_degree_.assign(n, 0);
        g.out_degree_.assign(n, 0);
        g.out_adj_.assign(n, {});
        for (const auto& [tail, label, head] : raw) {
            if (!g.out_adj_[tail].empty()) {
                const Arc& prev = g.arcs_[g.out_adj_[tail].back()];
                if (prev.label == label)
                    throw DuplicateOutLabel(g.names_[tail], label);
            }
            const auto id = static_cast<ArcId>(g.arcs_.size());
            g.arcs_.push_back(Arc{tail, head, label, id});
            g.out_adj_[tail].push_back(id);
            ++g.out_degree_[tail];
            ++g.in_degree_[head];
        }
        return g;
    }

    VertexId vertex_count() const { return static_cast<VertexId>(names_.size()); }
    ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }

    const Arc& arc(ArcId a) const { return arcs_[a]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::string& vertex_name(VertexId v) const { return names_[v]; }

    std::optional<VertexId> find_vertex(const std::string& name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) return std::nullopt;
        return static_cast<VertexId>(it - names_.begin());
    }

    // Arc ids sorted ascending by label.
    std::span<const ArcId> out_arcs(VertexId v) const { return out_adj_[v]; }

    int in_degree(VertexId v) const { return in_degree_[v]; }
    int out_degree(VertexId v) const { return out_degree_[v]; }

    bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

private:
    std::vector<std::string> names_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> out_adj_;
    std::vector<int> in_degree_;
    std::vector<int> out_degree_;
};

struct EulerianReport {
    bool balanced = true;
    bool strongly_connected_support = true;
    // (vertex, in_degree, out_degree) for every unbalanced vertex.
    std::vector<std::tuple<VertexId, int, int>> offending;
    bool is_eulerian() const { return balanced && strongly_connected_support; }
};

namespace detail {

// Marks everything reachable from `start` along the given adjacency.
inline void reach(const std::vector<std::vector<VertexId>>& adj, VertexId start,
                  std::vector<char>& seen) {
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj[u])
            if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
}

}  // namespace detail

// Balanced iff in_degree == out_degree everywhere; the support (vertices
// touching at least one arc) must form a single strongly connected
// component. Isolated vertices are ignored.
inline EulerianReport check_eulerian(const LabeledDigraph& g) {
    EulerianReport rep;
    VertexId root = kNoVertex;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.in_degree(v) != g.out_degree(v)) {
            rep.balanced = false;
            rep.offending.emplace_back(v, g.in_degree(v), g.out_degree(v));
        }
        if (root == kNoVertex && (g.in_degree(v) > 0 || g.out_degree(v) > 0))
            root = v;
    }
    if (root != kNoVertex) {
        std::vector<std::vector<VertexId>> forward(g.vertex_count()),
            backward(g.vertex_count());
        for (const Arc& a : g.arcs()) {
            forward[a.tail].push_back(a.head);
            backward[a.head].push_back(a.tail);
        }
        std::vector<char> fwd(g.vertex_count(), 0), bwd(g.vertex_count(), 0);
        detail::reach(forward, root, fwd);
        detail::reach(backward, root, bwd);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            bool support = g.in_degree(v) > 0 || g.out_degree(v) > 0;
            if (support && !(fwd[v] && bwd[v])) {
                rep.strongly_connected_support = false;
                break;
            }
        }
    }
    return rep;
}

struct NotEulerian : Error {
    EulerianReport report;
    explicit NotEulerian(EulerianReport r)
        : Error("graph is not Eulerian"), report(std::move(r)) {}
};

// Cut of U in g minus `used`: unused arcs with exactly one endpoint in U.
inline std::vector<ArcId> delta(const LabeledDigraph& g,
                                const std::vector<ArcId>& used,
                                const std::vector<VertexId>& members) {
    std::vector<char> in_u(g.vertex_count(), 0);
    for (VertexId v : members) {
        if (!g.has_vertex(v)) throw UnknownVertex("cut vertex out of range");
        in_u[v] = 1;
    }
    std::vector<char> is_used(g.arc_count(), 0);
    for (ArcId a : used) is_used[a] = 1;
    std::vector<ArcId> cut;
    for (const Arc& a : g.arcs()) {
        if (is_used[a.id]) continue;
        if (in_u[a.tail] != in_u[a.head]) cut.push_back(a.id);
    }
    return cut;
}

}  // namespace mintrail

#endif  // MINTRAIL_GRAPH_HPP
