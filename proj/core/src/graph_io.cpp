#include "mbsr/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mbsr/error.hpp"

namespace mbsr {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Splits a data line into exactly two non-negative integers.
bool parse_pair(std::string_view line, long long& a, long long& b) {
    auto next = [&line](long long& out) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
            line.remove_prefix(1);
        if (line.empty())
            return false;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
        if (ec != std::errc{} || out < 0)
            return false;
        line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
        return line.empty() || std::isspace(static_cast<unsigned char>(line.front()));
    };
    if (!next(a) || !next(b))
        return false;
    return trim(line).empty();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::vector<std::uint8_t> seen;
    int line_no = 0;
    int header_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;

        long long a = 0;
        long long b = 0;
        if (!parse_pair(line, a, b))
            throw ParseError(line_no, "expected two non-negative integers, got '" +
                                          std::string(line) + "'");
        if (n < 0) {
            if (a > 100000)
                throw ParseError(line_no, "vertex count too large");
            n = a;
            m = b;
            header_line = line_no;
            if (m > n * (n - 1) / 2)
                throw ParseError(line_no, "edge count exceeds n(n-1)/2");
            seen.assign(static_cast<std::size_t>(n * n), 0);
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
        if (a >= n || b >= n)
            throw ParseError(line_no, "endpoint out of range for n=" + std::to_string(n));
        if (a == b)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        auto& cell = seen[static_cast<std::size_t>(std::min(a, b) * n + std::max(a, b))];
        if (cell)
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        cell = 1;
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (n < 0)
        throw ParseError(line_no, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(header_line, "declared " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError(0, "JSON graph needs an integer field 'n'");
    const long long n = doc["n"].get<long long>();
    if (n < 0 || n > 100000)
        throw ParseError(0, "vertex count out of range");
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw ParseError(0, "'edges' must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError(0, "each edge must be a 2-array of integers");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    Graph g;
    try {
        g = Graph(static_cast<int>(n), edges);
    } catch (const PreconditionError& e) {
        throw ParseError(0, e.what());
    }
    if (doc.contains("labels")) {
        std::vector<std::string> labels;
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                throw ParseError(0, "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        try {
            g = g.with_labels(std::move(labels));
        } catch (const PreconditionError& e) {
            throw ParseError(0, e.what());
        }
    }
    return g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        std::string_view t = trim(text);
        format = (!t.empty() && t.front() == '{') ? GraphFormat::Json : GraphFormat::EdgeList;
    }
    return format == GraphFormat::Json ? parse_graph_json(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (format == GraphFormat::Auto && path.extension() == ".json")
        format = GraphFormat::Json;
    return parse_graph(buffer.str(), format);
}

std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments)
        out << "# " << c << '\n';
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string format_graph_json(const Graph& g) {
    nlohmann::json doc;
    doc["n"] = g.order();
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges())
        doc["edges"].push_back({e.u, e.v});
    if (!g.labels().empty())
        doc["labels"] = g.labels();
    return doc.dump() + "\n";
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v << " [label=\"";
        if (g.labels().empty())
            out << v;
        else
            for (char c : g.labels()[v])
                out << (c == '"' ? "\\\"" : std::string(1, c));
        out << "\"];\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace mbsr
