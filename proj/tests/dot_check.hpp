#pragma once
// Recognizer for the DOT subset the CLI emits:
//   graph := 'digraph' ID? '{' stmt* '}'
//   stmt  := node ';' | node '->' node ';'
//   node  := '"' [^"]* '"'

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dotcheck {

struct Graph {
    std::set<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ == s_.size();
    }
    bool literal(const std::string& word) {
        skip_ws();
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }
    std::optional<std::string> bare_id() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (pos_ == start) return std::nullopt;
        return s_.substr(start, pos_ - start);
    }
    std::optional<std::string> quoted() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '"') return std::nullopt;
        const auto end = s_.find('"', pos_ + 1);
        if (end == std::string::npos) return std::nullopt;
        std::string id = s_.substr(pos_ + 1, end - pos_ - 1);
        pos_ = end + 1;
        return id;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// The parsed graph, or nullopt on any syntax error or edge to an undeclared node.
inline std::optional<Graph> parse(const std::string& text) {
    Lexer lex(text);
    if (!lex.literal("digraph")) return std::nullopt;
    lex.bare_id();
    if (!lex.literal("{")) return std::nullopt;
    Graph g;
    while (!lex.literal("}")) {
        auto a = lex.quoted();
        if (!a) return std::nullopt;
        if (lex.literal("->")) {
            auto b = lex.quoted();
            if (!b || !g.nodes.count(*a) || !g.nodes.count(*b)) return std::nullopt;
            g.edges.emplace_back(*a, *b);
        } else {
            g.nodes.insert(*a);
        }
        if (!lex.literal(";")) return std::nullopt;
    }
    if (!lex.done()) return std::nullopt;
    return g;
}

}  // namespace dotcheck
