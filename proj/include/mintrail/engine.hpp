#ifndef MINTRAIL_ENGINE_HPP
#define MINTRAIL_ENGINE_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mintrail/graph.hpp"
#include "mintrail/trail.hpp"

namespace mintrail {

struct TrailStats {
    std::uint64_t arc_visits = 0;
    std::uint64_t splices = 0;
    std::uint64_t arcs_total = 0;
};

struct SingletonCutViolation : Error {
    using Error::Error;
};

// Per-run mutable state. Arcs at each vertex are consumed in strictly
// increasing label order, so a single cursor per vertex identifies the
// minimal-label unused out-arc; a vertex is exhausted exactly when its
// remaining out-degree hits zero (in/out counts stay balanced along closed
// trails). Every appended arc pushes one visit-stack entry, and every entry
// is popped at most once, which keeps the whole run within 2|A| arc visits.
class EngineState {
public:
    explicit EngineState(const LabeledDigraph& g)
        : cursor_(g.vertex_count(), 0), remaining_out_(g.vertex_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            remaining_out_[v] = g.out_degree(v);
    }

    bool exhausted(VertexId v) const { return remaining_out_[v] == 0; }
    int cursor(VertexId v) const { return cursor_[v]; }
    std::uint64_t arc_visits() const { return arc_visits_; }

    // Next unused out-arc of minimal label, if any. Advances the cursor.
    std::optional<ArcId> take_min_arc(const LabeledDigraph& g, VertexId v) {
        if (remaining_out_[v] == 0) return std::nullopt;
        ArcId a = g.out_arcs(v)[cursor_[v]++];
        --remaining_out_[v];
        ++arc_visits_;
        return a;
    }

    void push_visit(VertexId v, Trail::Handle h) { visit_stack_.emplace_back(v, h); }

    // Pops exhausted entries off the visit stack; the surviving top is the
    // last non-exhausted vertex visited, at its last visit so far. The
    // returned entry is consumed (the caller's splice exhausts it).
    std::optional<std::pair<VertexId, Trail::Handle>> last_nonexhausted() {
        while (!visit_stack_.empty()) {
            auto entry = visit_stack_.back();
            visit_stack_.pop_back();
            ++arc_visits_;
            if (!exhausted(entry.first)) return entry;
        }
        return std::nullopt;
    }

private:
    std::vector<int> cursor_;
    std::vector<int> remaining_out_;
    std::vector<std::pair<VertexId, Trail::Handle>> visit_stack_;
    std::uint64_t arc_visits_ = 0;
};

// W(G \ used, v): greedily follow the unused out-arc of minimal label until
// the current vertex has none left. In a balanced graph the result is
// closed at v and exhausts v. An exhausted start yields the empty trail.
inline Trail alphabetic_trail(const LabeledDigraph& g, EngineState& state, VertexId v) {
    Trail w(v);
    VertexId at = v;
    while (auto arc = state.take_min_arc(g, at)) {
        const Arc& a = g.arc(*arc);
        w.append(a.id, a.label, a.head);
        state.push_visit(at, w.last_step_handle());
        at = a.head;
    }
    return w;
}

struct EngineOptions {
    // Check the singleton-cut property at every splice. Costs more than
    // O(1) per splice, so it is off outside diagnostics.
    bool check_singleton_cut = false;
};

namespace detail {

// At a splice of vertex v whose continuation step sits at `at`, the cut of
// the tail segment's vertices in the graph minus the head segment's arcs
// must be exactly the one arc leaving v's last visit.
inline void assert_singleton_cut(const LabeledDigraph& g, const Trail& t,
                                 Trail::Handle at) {
    std::vector<ArcId> used_head;
    std::vector<VertexId> tail_vertices;
    for (auto it = t.begin(); it != Trail::const_iterator(at); ++it)
        used_head.push_back(it->arc);
    bool first = true;
    for (auto it = Trail::const_iterator(at); it != t.end(); ++it) {
        if (!first) tail_vertices.push_back(it->vertex);
        first = false;
    }
    tail_vertices.push_back(t.end_vertex());
    std::vector<ArcId> cut = delta(g, used_head, tail_vertices);
    if (cut.size() != 1 || cut.front() != at->arc)
        throw SingletonCutViolation("splice cut is not the single continuation arc");
}

}  // namespace detail

// Minimal Eulerian trail from r: repeatedly build the alphabetic trail from
// the last non-exhausted visited vertex and splice it back in at that visit.
// The resulting closed trail uses every arc once and its label is the
// lexicographically least among all Eulerian trails starting at r.
inline std::pair<Trail, TrailStats> minimal_eulerian_trail(
    const LabeledDigraph& g, VertexId r, const EngineOptions& opts = {}) {
    if (!g.has_vertex(r)) {
        if (g.vertex_count() == 0 && g.arc_count() == 0)
            return {Trail(r), TrailStats{}};
        throw UnknownVertex("start vertex out of range");
    }
    EulerianReport rep = check_eulerian(g);
    if (!rep.is_eulerian()) throw NotEulerian(std::move(rep));
    TrailStats stats;
    stats.arcs_total = static_cast<std::uint64_t>(g.arc_count());
    Trail t(r);
    if (g.arc_count() == 0) return {std::move(t), stats};
    if (g.out_degree(r) == 0)
        throw UnknownVertex("start vertex is isolated in a non-empty graph");

    EngineState state(g);
    VertexId v = r;
    Trail::Handle at = t.end_handle();
    bool first = true;
    while (true) {
        Trail w = alphabetic_trail(g, state, v);
        if (opts.check_singleton_cut && !first)
            detail::assert_singleton_cut(g, t, at);
        t.splice(at, w);
        ++stats.splices;
        first = false;
        auto next = state.last_nonexhausted();
        if (!next) break;
        v = next->first;
        at = next->second;
    }
    stats.arc_visits = state.arc_visits();
    assert(state.exhausted(r));
    return {std::move(t), stats};
}

}  // namespace mintrail

#endif  // MINTRAIL_ENGINE_HPP
