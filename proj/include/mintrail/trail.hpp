#ifndef MINTRAIL_TRAIL_HPP
#define MINTRAIL_TRAIL_HPP

#include <list>
#include <string>

#include "mintrail/graph.hpp"

namespace mintrail {

struct SpliceMismatch : Error {
    using Error::Error;
};

struct TrailStep {
    VertexId vertex;  // tail of the arc taken at this visit
    ArcId arc;
    Symbol label;
};

// Alternating vertex/arc sequence. Steps live in a linked list so a closed
// sub-trail can be spliced into the middle in constant time; handles are
// list iterators, which stay valid across splices.
class Trail {
public:
    using Handle = std::list<TrailStep>::iterator;
    using const_iterator = std::list<TrailStep>::const_iterator;

    Trail() = default;
    explicit Trail(VertexId at) : start_(at), end_(at) {}

    VertexId start_vertex() const { return start_; }
    VertexId end_vertex() const { return end_; }
    bool empty() const { return steps_.empty(); }
    std::size_t size() const { return steps_.size(); }

    const_iterator begin() const { return steps_.begin(); }
    const_iterator end() const { return steps_.end(); }

    void append(ArcId arc, Symbol label, VertexId to) {
        steps_.push_back(TrailStep{end_, arc, label});
        end_ = to;
    }

    // Insertion position for a visit happening at the very end of the trail.
    Handle end_handle() { return steps_.end(); }

    // Iterator to the most recently appended step.
    Handle last_step_handle() { return std::prev(steps_.end()); }

    // Vertex located at an insertion position.
    VertexId vertex_at(Handle h) const {
        return h == steps_.end() ? end_ : h->vertex;
    }

    std::string label() const {
        std::string w;
        w.reserve(steps_.size());
        for (const TrailStep& s : steps_) w.push_back(s.label);
        return w;
    }

    // (Tv) W (vT): moves W's steps into this trail just before `at`.
    // W must be a closed trail anchored at the vertex sitting at `at`.
    void splice(Handle at, Trail& w) {
        if (w.empty()) {
            if (w.start_ != vertex_at(at))
                throw SpliceMismatch("empty trail anchored at a different vertex");
            return;
        }
        if (w.start_ != w.end_ || w.start_ != vertex_at(at))
            throw SpliceMismatch("spliced trail is not closed at the splice vertex");
        if (empty()) end_ = w.end_;
        steps_.splice(at, w.steps_);
        w.end_ = w.start_;
    }

private:
    std::list<TrailStep> steps_;
    VertexId start_ = kNoVertex;
    VertexId end_ = kNoVertex;
};

// True iff T starts and ends at r, chains head-to-tail, and uses every arc
// of g exactly once.
inline bool verify_eulerian_trail(const LabeledDigraph& g, const Trail& t, VertexId r) {
    if (g.arc_count() == 0)
        return t.empty() && (g.vertex_count() == 0 || t.start_vertex() == r);
    if (t.start_vertex() != r || t.end_vertex() != r) return false;
    if (t.size() != static_cast<std::size_t>(g.arc_count())) return false;
    std::vector<char> seen(g.arc_count(), 0);
    VertexId at = r;
    for (const TrailStep& s : t) {
        if (s.arc < 0 || s.arc >= g.arc_count()) return false;
        const Arc& a = g.arc(s.arc);
        if (seen[s.arc] || a.tail != at || a.tail != s.vertex || a.label != s.label)
            return false;
        seen[s.arc] = 1;
        at = a.head;
    }
    return at == r;
}

}  // namespace mintrail

#endif  // MINTRAIL_TRAIL_HPP
