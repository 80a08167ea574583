#include "scc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace scc {

namespace {

struct Line {
    std::size_t number; // 1-based
    std::vector<std::string_view> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        ++number;
        start = end + 1;
        Line out{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            if (i >= line.size() || line[i] == '#')
                break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            out.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!out.tokens.empty())
            lines.push_back(std::move(out));
        if (end == text.size())
            break;
    }
    return lines;
}

std::uint32_t parse_number(const Line& line, std::size_t index, const char* what) {
    const auto token = line.tokens[index];
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(line.number, std::string("expected a nonnegative integer for ") + what);
    return value;
}

} // namespace

RawInstance parse_raw_instance(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t at = 0;
    auto expect = [&](const char* keyword, std::size_t tokens) -> const Line& {
        if (at >= lines.size())
            fail(lines.empty() ? 1 : lines.back().number, std::string("missing `") + keyword + "` line");
        const Line& line = lines[at];
        if (line.tokens[0] != keyword)
            fail(line.number, std::string("expected `") + keyword + "`, got `" +
                                  std::string(line.tokens[0]) + "`");
        if (line.tokens.size() != tokens)
            fail(line.number, std::string("`") + keyword + "` takes " +
                                  std::to_string(tokens - 1) + " value(s)");
        ++at;
        return line;
    };

    const Line& header = expect("scc", 2);
    if (header.tokens[1] != "1")
        fail(header.number, "unsupported format version");
    RawInstance raw;
    raw.k = parse_number(expect("colors", 2), 1, "colors");
    const std::uint32_t n = parse_number(expect("vertices", 2), 1, "vertices");

    std::vector<EdgeRecord> edges;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        if (line.tokens[0] != "arc")
            fail(line.number, "expected `arc`, got `" + std::string(line.tokens[0]) + "`");
        if (line.tokens.size() != 5)
            fail(line.number, "`arc` takes 4 values: u v c_u c_v");
        ArcSpec spec{parse_number(line, 1, "u"), parse_number(line, 2, "v"),
                     parse_number(line, 3, "c_u"), parse_number(line, 4, "c_v")};
        if (spec.u == spec.v)
            fail(line.number, "loop arcs are not allowed");
        if (spec.u >= n || spec.v >= n)
            fail(line.number, "arc endpoint out of range");
        if (spec.cu >= raw.k || spec.cv >= raw.k)
            fail(line.number, "conflict color out of range");
        raw.arcs.push_back(spec);
        edges.push_back({spec.u, spec.v});
    }
    raw.graph = MultiGraph(n, std::move(edges));
    return raw;
}

ConflictInstance parse_instance(std::string_view text) {
    const RawInstance raw = parse_raw_instance(text);
    return make_normalized_instance(raw.graph.vertex_count(), raw.k, raw.arcs);
}

std::string emit_instance(const ConflictInstance& inst) {
    std::vector<std::tuple<VertexId, VertexId, Color, Color>> rows;
    rows.reserve(inst.arc_count());
    for (EdgeId e = 0; e < inst.arc_count(); ++e) {
        const Arc a = inst.arc(e);
        const ConflictPair c = inst.conflict(e);
        rows.emplace_back(a.tail, a.head, c.at_tail, c.at_head);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream out;
    out << "scc 1\n";
    out << "colors " << inst.k() << "\n";
    out << "vertices " << inst.vertex_count() << "\n";
    for (const auto& [t, h, ct, ch] : rows)
        out << "arc " << t << " " << h << " " << ct << " " << ch << "\n";
    return out.str();
}

Coloring parse_coloring(std::string_view text, std::uint32_t vertex_count) {
    const auto lines = tokenize(text);
    Coloring col(vertex_count, 0);
    std::vector<bool> seen(vertex_count, false);
    for (const Line& line : lines) {
        if (line.tokens[0] != "v")
            fail(line.number, "expected `v`, got `" + std::string(line.tokens[0]) + "`");
        if (line.tokens.size() != 3)
            fail(line.number, "`v` takes 2 values: vertex color");
        const std::uint32_t vertex = parse_number(line, 1, "vertex");
        const std::uint32_t color = parse_number(line, 2, "color");
        if (vertex >= vertex_count)
            fail(line.number, "vertex out of range");
        if (seen[vertex])
            fail(line.number, "vertex " + std::to_string(vertex) + " assigned twice");
        seen[vertex] = true;
        col[vertex] = color;
    }
    for (std::uint32_t v = 0; v < vertex_count; ++v)
        if (!seen[v])
            throw ParseError("vertex " + std::to_string(v) + " has no color");
    return col;
}

std::string emit_coloring(const Coloring& col) {
    std::ostringstream out;
    for (std::size_t v = 0; v < col.size(); ++v)
        out << "v " << v << " " << col[v] << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace scc
