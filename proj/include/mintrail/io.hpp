#ifndef MINTRAIL_IO_HPP
#define MINTRAIL_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mintrail/debruijn.hpp"
#include "mintrail/graph.hpp"

namespace mintrail {

struct ParseError : Error {
    int line;
    ParseError(int l, const std::string& msg)
        : Error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace detail

// One arc per line: `tail label head`, whitespace-separated. Labels are
// single characters; `#` starts a comment.
inline std::vector<ArcTriple> parse_graph_text(std::istream& in) {
    std::vector<ArcTriple> triples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(detail::strip_comment(line));
        std::string tail, label, head, extra;
        if (!(fields >> tail)) continue;  // blank or comment-only
        if (!(fields >> label >> head))
            throw ParseError(lineno, "expected `tail label head`");
        if (fields >> extra) throw ParseError(lineno, "trailing field '" + extra + "'");
        if (label.size() != 1)
            throw ParseError(lineno, "label '" + label + "' must be a single character");
        triples.push_back(ArcTriple{tail, label[0], head});
    }
    return triples;
}

// One word per line; `#` comments and blank lines ignored.
inline std::vector<std::string> parse_dictionary_text(std::istream& in) {
    std::vector<std::string> words;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(detail::strip_comment(line));
        std::string word, extra;
        if (!(fields >> word)) continue;
        if (fields >> extra) throw ParseError(lineno, "trailing field '" + extra + "'");
        words.push_back(std::move(word));
    }
    return words;
}

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return in;
}

inline LabeledDigraph load_graph(const std::string& path) {
    auto in = open_or_throw(path);
    return LabeledDigraph::from_triples(parse_graph_text(in));
}

inline Dictionary load_dictionary(const std::string& path) {
    auto in = open_or_throw(path);
    return Dictionary::from_words(parse_dictionary_text(in));
}

// Emits a graph back out in the graph text format.
inline std::string graph_to_text(const LabeledDigraph& g) {
    std::ostringstream out;
    for (const Arc& a : g.arcs())
        out << g.vertex_name(a.tail) << ' ' << a.label << ' ' << g.vertex_name(a.head)
            << '\n';
    return out.str();
}

}  // namespace mintrail

#endif  // MINTRAIL_IO_HPP
