#include "text_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace pebblelab {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::string raw; // after comment stripping
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens), raw});
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

// Consumes one basic family spec from tokens[*pos].
Graph parse_basic_family(const Line& line, const std::vector<std::string>& tokens,
                         std::size_t* pos, int vertex_budget) {
    if (*pos >= tokens.size())
        throw ParseError(line.number, "missing family name");
    const std::string& name = tokens[*pos];
    ++*pos;
    auto next_int = [&](const char* what) {
        if (*pos >= tokens.size())
            throw ParseError(line.number, std::string("family '") + name + "' missing " + what);
        return parse_int(line, tokens[(*pos)++], what);
    };
    if (name == "complete") return build_complete(next_int("vertex count"), vertex_budget);
    if (name == "path") return build_path(next_int("vertex count"), vertex_budget);
    if (name == "cycle") return build_cycle(next_int("vertex count"), vertex_budget);
    if (name == "hamming") {
        int m = next_int("alphabet size");
        int k = next_int("word length");
        return build_hamming(m, k, vertex_budget);
    }
    throw ParseError(line.number, "unknown family '" + name + "'");
}

Graph parse_family_line(const Line& line, int vertex_budget) {
    std::size_t pos = 1; // after "family"
    if (pos < line.tokens.size() && line.tokens[pos] == "product") {
        ++pos;
        if (pos >= line.tokens.size())
            throw ParseError(line.number, "product needs at least one factor");
        Graph acc = parse_basic_family(line, line.tokens, &pos, vertex_budget);
        while (pos < line.tokens.size()) {
            Graph next = parse_basic_family(line, line.tokens, &pos, vertex_budget);
            acc = cartesian_product(acc, next, vertex_budget);
        }
        return acc;
    }
    Graph g = parse_basic_family(line, line.tokens, &pos, vertex_budget);
    if (pos != line.tokens.size())
        throw ParseError(line.number, "unexpected trailing token '" + line.tokens[pos] + "'");
    return g;
}

} // namespace

Graph load_graph(const std::string& text, int vertex_budget) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty graph file");

    const Line& head = lines.front();
    if (head.tokens[0] == "family") {
        if (lines.size() > 1)
            throw ParseError(lines[1].number, "a family line must be the only content");
        return parse_family_line(head, vertex_budget);
    }

    if (head.tokens[0] != "graph" || head.tokens.size() != 2)
        throw ParseError(head.number, "expected 'graph <n>' or 'family <name> <params...>'");
    int n = parse_int(head, head.tokens[1], "vertex count");
    if (n < 1)
        throw ParseError(head.number, "graph must have at least one vertex");
    if (n > vertex_budget)
        throw SizeBudgetError("graph file declares " + std::to_string(n) +
                              " vertices, over the budget of " + std::to_string(vertex_budget));

    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> edges;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& kw = line.tokens[0];
        if (kw == "label") {
            if (line.tokens.size() < 3)
                throw ParseError(line.number, "expected 'label <i> <string>'");
            int v = parse_int(line, line.tokens[1], "vertex index");
            if (v < 0 || v >= n)
                throw ParseError(line.number, "label vertex out of range");
            // label text is everything after the index token
            auto at = line.raw.find(line.tokens[1]);
            at = line.raw.find_first_not_of(" \t", at + line.tokens[1].size());
            labels[static_cast<std::size_t>(v)] = line.raw.substr(at);
            // trim trailing whitespace
            auto& s = labels[static_cast<std::size_t>(v)];
            s.erase(s.find_last_not_of(" \t\r") + 1);
        } else if (kw == "edge") {
            if (line.tokens.size() != 3)
                throw ParseError(line.number, "expected 'edge <u> <v>'");
            int u = parse_int(line, line.tokens[1], "vertex index");
            int v = parse_int(line, line.tokens[2], "vertex index");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(line.number, "edge endpoint out of range");
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line.number, "unknown directive '" + kw + "'");
        }
    }
    return Graph(n, std::move(edges), std::move(labels));
}

std::string save_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "label " << v << " " << g.label(v) << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) out << "edge " << u << " " << v << "\n";
    return out.str();
}

Distribution load_distribution(const std::string& text, const Graph& g) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(1, std::string("invalid JSON distribution: ") + e.what());
        }
        if (!doc.contains("n") || !doc.contains("counts") || !doc["counts"].is_array())
            throw ParseError(1, "JSON distribution needs fields 'n' and 'counts'");
        int n = doc["n"].get<int>();
        if (n != g.vertex_count())
            throw ValidationError("distribution is for " + std::to_string(n) +
                                  " vertices but the graph has " +
                                  std::to_string(g.vertex_count()));
        if (static_cast<int>(doc["counts"].size()) != n)
            throw ParseError(1, "counts array length does not match n");
        Distribution d(n);
        for (int v = 0; v < n; ++v) d.set_count(v, doc["counts"][static_cast<std::size_t>(v)].get<int>());
        return d;
    }

    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty distribution file");
    const Line& head = lines.front();
    if (head.tokens[0] != "dist" || head.tokens.size() != 2)
        throw ParseError(head.number, "expected 'dist <n>'");
    int n = parse_int(head, head.tokens[1], "vertex count");
    if (n != g.vertex_count())
        throw ValidationError("distribution is for " + std::to_string(n) +
                              " vertices but the graph has " +
                              std::to_string(g.vertex_count()));
    Distribution d(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] != "pebbles" || line.tokens.size() != 3)
            throw ParseError(line.number, "expected 'pebbles <vertex> <count>'");
        int v = parse_int(line, line.tokens[1], "vertex index");
        int c = parse_int(line, line.tokens[2], "pebble count");
        if (v < 0 || v >= n)
            throw ParseError(line.number, "vertex out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw ParseError(line.number, "duplicate vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
        if (c < 0)
            throw ParseError(line.number, "pebble count must be nonnegative");
        d.set_count(v, c);
    }
    return d;
}

std::string save_distribution(const Distribution& d) {
    std::ostringstream out;
    out << "dist " << d.vertex_count() << "\n";
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.count(v) > 0) out << "pebbles " << v << " " << d.count(v) << "\n";
    return out.str();
}

std::string graph_digest(const Graph& g) {
    std::string text = save_graph(g);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace pebblelab
