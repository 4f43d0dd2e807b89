#ifndef MINTRAIL_DEBRUIJN_HPP
#define MINTRAIL_DEBRUIJN_HPP

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mintrail/engine.hpp"
#include "mintrail/graph.hpp"

namespace mintrail {

struct NonUniformLength : Error {
    using Error::Error;
};

struct NoDeBruijnSequence : Error {
    EulerianReport report;
    explicit NoDeBruijnSequence(EulerianReport r)
        : Error("dictionary graph admits no de Bruijn sequence"), report(std::move(r)) {}
};

// Distinct words of uniform length n+1.
class Dictionary {
public:
    static Dictionary from_words(std::vector<std::string> words) {
        if (words.empty()) throw Error("empty dictionary");
        const std::size_t span = words.front().size();
        for (const auto& w : words)
            if (w.size() != span)
                throw NonUniformLength("word '" + w + "' has length " +
                                       std::to_string(w.size()) + ", expected " +
                                       std::to_string(span));
        if (span < 1) throw Error("dictionary words must be non-empty");
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        Dictionary d;
        d.words_ = std::move(words);
        return d;
    }

    const std::vector<std::string>& words() const { return words_; }
    int span() const { return static_cast<int>(words_.front().size()); }
    int order() const { return span() - 1; }  // n

private:
    std::vector<std::string> words_;
};

// Vertices are the length-n prefixes and suffixes of the dictionary; each
// word avb induces one arc av -> vb labeled b. Needs span >= 2 so vertex
// names are non-empty.
inline LabeledDigraph build_debruijn_graph(const Dictionary& d) {
    if (d.span() < 2) throw Error("de Bruijn graph needs span >= 2");
    const std::size_t n = static_cast<std::size_t>(d.order());
    std::vector<ArcTriple> triples;
    triples.reserve(d.words().size());
    for (const std::string& w : d.words())
        triples.push_back(ArcTriple{w.substr(0, n), w.back(), w.substr(1)});
    return LabeledDigraph::from_triples(triples);
}

// All |s| circular windows of length k.
inline std::vector<std::string> circular_factors(std::string_view s, int k) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::string f;
        f.reserve(k);
        for (int j = 0; j < k; ++j) f.push_back(s[(i + j) % s.size()]);
        out.push_back(std::move(f));
    }
    return out;
}

// True iff the circular span-length factors of s are exactly the dictionary,
// each appearing once.
inline bool validate_sequence(std::string_view s, const Dictionary& d) {
    if (s.size() != d.words().size()) return false;
    std::vector<std::string> factors = circular_factors(s, d.span());
    std::sort(factors.begin(), factors.end());
    if (std::adjacent_find(factors.begin(), factors.end()) != factors.end())
        return false;
    return factors == d.words();
}

// z . B' where z is the minimal vertex name and B = B'.z is the minimal
// Eulerian trail label from z. The suffix identity is checked at runtime.
inline std::string minimal_debruijn_sequence(const Dictionary& d,
                                             TrailStats* stats = nullptr) {
    if (d.span() == 1) {
        // Degenerate span: any arrangement covers the dictionary, so the
        // sorted symbols are the minimal sequence.
        std::string s;
        for (const std::string& w : d.words()) s += w;
        if (stats) *stats = TrailStats{};
        return s;
    }
    LabeledDigraph g = build_debruijn_graph(d);
    EulerianReport rep = check_eulerian(g);
    if (!rep.is_eulerian()) throw NoDeBruijnSequence(std::move(rep));
    const VertexId z = 0;  // vertex ids follow name order
    auto [trail, st] = minimal_eulerian_trail(g, z);
    if (stats) *stats = st;
    std::string b = trail.label();
    const std::string& zname = g.vertex_name(z);
    if (b.size() < zname.size()) {
        // Fewer words than the vertex-name length: the label is shorter than
        // any vertex name, so the z-prefix extraction is undefined. The label
        // itself is the full circular word; return its minimal rotation.
        std::string best = b;
        std::string rot = b;
        for (std::size_t i = 1; i < rot.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            best = std::min(best, rot);
        }
        return best;
    }
    if (!b.ends_with(zname))
        throw Error("trail label does not end with the start vertex name");
    return zname + b.substr(0, b.size() - zname.size());
}

}  // namespace mintrail

#endif  // MINTRAIL_DEBRUIJN_HPP
