#ifndef MINTRAIL_ORACLE_HPP
#define MINTRAIL_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mintrail/graph.hpp"

// Independent ground-truth machinery for property tests: exhaustive trail
// enumeration, BEST-theorem counting, the classical Lyndon-word sequence,
// and a seeded Eulerian instance generator. None of it shares traversal
// code with the trail engine.
namespace mintrail::oracle {

using BigInt = boost::multiprecision::cpp_int;

struct LimitExceeded : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

struct TrailEnumeration {
    std::vector<std::string> labels;  // sorted, pairwise distinct
    std::uint64_t count = 0;
};

// Depth-first backtracking over unused arcs; emits the label of every
// closed trail from r that uses all arcs. Aborts past `limit` search states.
inline TrailEnumeration enumerate_eulerian_trails(const LabeledDigraph& g, VertexId r,
                                                  std::uint64_t limit = 10'000'000) {
    if (!g.has_vertex(r)) throw UnknownVertex("start vertex out of range");
    TrailEnumeration result;
    std::vector<char> used(g.arc_count(), 0);
    std::string label;
    std::uint64_t states = 0;
    std::function<void(VertexId, int)> dfs = [&](VertexId at, int remaining) {
        if (++states > limit) throw LimitExceeded("enumeration state budget exceeded");
        if (remaining == 0) {
            if (at == r) result.labels.push_back(label);
            return;
        }
        for (ArcId a : g.out_arcs(at)) {
            if (used[a]) continue;
            used[a] = 1;
            label.push_back(g.arc(a).label);
            dfs(g.arc(a).head, remaining - 1);
            label.pop_back();
            used[a] = 0;
        }
    };
    dfs(r, g.arc_count());
    std::sort(result.labels.begin(), result.labels.end());
    result.count = result.labels.size();
    return result;
}

inline std::string bruteforce_minimal_trail(const LabeledDigraph& g, VertexId r,
                                            std::uint64_t limit = 10'000'000) {
    TrailEnumeration e = enumerate_eulerian_trails(g, r, limit);
    if (e.labels.empty()) throw Error("no Eulerian trail from the given vertex");
    return e.labels.front();
}

namespace detail {

// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

// Number of Eulerian trails starting at r, counted as arc sequences:
// det(reduced out-degree Laplacian) * prod_v (out(v)-1)! * out(r).
// Self-loops cancel out of the Laplacian and are dropped from it.
inline BigInt best_count(const LabeledDigraph& g, VertexId r) {
    if (!g.has_vertex(r)) throw UnknownVertex("start vertex out of range");
    EulerianReport rep = check_eulerian(g);
    if (!rep.is_eulerian()) throw NotEulerian(std::move(rep));
    if (g.arc_count() == 0) return 1;
    if (g.out_degree(r) == 0) return 0;

    // Support vertices only; isolated ones would zero the determinant.
    std::vector<VertexId> support;
    std::vector<VertexId> pos(g.vertex_count(), kNoVertex);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) > 0) {
            pos[v] = static_cast<VertexId>(support.size());
            support.push_back(v);
        }
    const std::size_t n = support.size();
    std::vector<std::vector<BigInt>> lap(n, std::vector<BigInt>(n, 0));
    for (const Arc& a : g.arcs()) {
        if (a.tail == a.head) continue;
        lap[pos[a.tail]][pos[a.tail]] += 1;
        lap[pos[a.tail]][pos[a.head]] -= 1;
    }
    // Strike the root's row and column.
    const VertexId rr = pos[r];
    std::vector<std::vector<BigInt>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<VertexId>(i) == rr) continue;
        std::vector<BigInt> row;
        row.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (static_cast<VertexId>(j) != rr) row.push_back(lap[i][j]);
        minor.push_back(std::move(row));
    }
    BigInt count = detail::determinant(std::move(minor));
    for (VertexId v : support) count *= detail::factorial(g.out_degree(v) - 1);
    count *= g.out_degree(r);
    return count;
}

// Digits then letters; bounds the generator's alphabet.
inline Symbol nth_symbol(int i) {
    static constexpr char table[] =
        "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    return table[i];
}
inline constexpr int kMaxAlphabet = 62;

// Lexicographically least de Bruijn sequence over k symbols of span n+1:
// concatenation, in increasing order, of the Lyndon words whose length
// divides the span (the classical Fredricksen-Kessler-Maiorana result).
inline std::string fkm_sequence(int alphabet_size, int span) {
    if (alphabet_size < 2 || span < 1) throw Error("fkm_sequence needs k >= 2, span >= 1");
    std::string out;
    std::vector<int> a(span + 1, 0);
    std::function<void(int, int)> gen = [&](int t, int p) {
        if (t > span) {
            if (span % p == 0)
                for (int i = 1; i <= p; ++i) out.push_back(nth_symbol(a[i]));
            return;
        }
        a[t] = a[t - p];
        gen(t + 1, p);
        for (int j = a[t - p] + 1; j < alphabet_size; ++j) {
            a[t] = j;
            gen(t + 1, t);
        }
    };
    gen(1, 1);
    return out;
}

struct GeneratorConfig {
    int vertex_count = 4;
    int cycle_count = 2;
    int alphabet_size = 4;
    std::uint64_t seed = 0;
    int max_attempts = 256;
};

// Superposes random closed walks (always balanced), labels each vertex's
// out-arcs with random distinct symbols, and rejects until the arc support
// is strongly connected. Deterministic per seed.
inline LabeledDigraph random_eulerian_graph(const GeneratorConfig& cfg) {
    if (cfg.vertex_count < 1 || cfg.cycle_count < 1 || cfg.alphabet_size < 1 ||
        cfg.alphabet_size > kMaxAlphabet)
        throw Error("invalid generator config");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pick_vertex(0, cfg.vertex_count - 1);
    std::uniform_int_distribution<int> pick_length(1, cfg.vertex_count);

    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> arcs;
        for (int c = 0; c < cfg.cycle_count; ++c) {
            int len = pick_length(rng);
            std::vector<int> walk(len);
            for (int& v : walk) v = pick_vertex(rng);
            for (int i = 0; i < len; ++i)
                arcs.emplace_back(walk[i], walk[(i + 1) % len]);
        }
        std::vector<int> out_deg(cfg.vertex_count, 0);
        for (auto& [t, h] : arcs) ++out_deg[t];
        if (*std::max_element(out_deg.begin(), out_deg.end()) > cfg.alphabet_size)
            continue;

        std::vector<std::vector<Symbol>> pool(cfg.vertex_count);
        for (int v = 0; v < cfg.vertex_count; ++v) {
            std::vector<Symbol> symbols(cfg.alphabet_size);
            for (int i = 0; i < cfg.alphabet_size; ++i) symbols[i] = nth_symbol(i);
            std::shuffle(symbols.begin(), symbols.end(), rng);
            symbols.resize(out_deg[v]);
            pool[v] = std::move(symbols);
        }
        std::vector<ArcTriple> triples;
        triples.reserve(arcs.size());
        for (auto& [t, h] : arcs) {
            Symbol label = pool[t].back();
            pool[t].pop_back();
            triples.push_back(
                ArcTriple{"v" + std::to_string(t), label, "v" + std::to_string(h)});
        }
        LabeledDigraph g = LabeledDigraph::from_triples(triples);
        if (check_eulerian(g).is_eulerian()) return g;
    }
    throw GenerationFailed("no strongly connected instance within the retry budget");
}

}  // namespace mintrail::oracle

#endif  // MINTRAIL_ORACLE_HPP
