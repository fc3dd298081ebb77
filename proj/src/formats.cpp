#include "secdom/formats.hpp"

#include <charconv>
#include <vector>

#include "secdom/errors.hpp"

namespace secdom {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long> parse_nonneg(std::string_view tok) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0) return std::nullopt;
    return v;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        out.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return out;
}

}  // namespace

std::optional<GraphFormat> parse_format_name(std::string_view name) {
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "edge-list") return GraphFormat::EdgeList;
    return std::nullopt;
}

std::string_view format_name(GraphFormat f) {
    return f == GraphFormat::Graph6 ? "graph6" : "edge-list";
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw ParseError("graph6: empty input");
    std::vector<int> sixes;
    for (char c : text) {
        const int v = static_cast<unsigned char>(c);
        if (v < 63 || v > 126) throw ParseError("graph6: byte outside 63..126");
        sixes.push_back(v - 63);
    }
    std::size_t pos = 0;
    long n = 0;
    if (sixes[0] < 63) {
        n = sixes[0];
        pos = 1;
    } else {
        if (sixes.size() < 4) throw ParseError("graph6: truncated size header");
        if (sixes[1] == 63) throw ParseError("graph6: graphs above 258047 vertices are not supported");
        n = (static_cast<long>(sixes[1]) << 12) | (sixes[2] << 6) | sixes[3];
        if (n <= 62) throw ParseError("graph6: non-canonical long size header");
        pos = 4;
    }
    if (n > kMaxVertices) throw ParseError("graph6: graph too large");
    const long pairs = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
    if (sixes.size() - pos != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                         std::to_string(sixes.size() - pos));
    std::vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sixes[pos + static_cast<std::size_t>(k / 6)];
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    if (k % 6 != 0) {
        const int tail = sixes.back() & ((1 << (6 - k % 6)) - 1);
        if (tail != 0) throw ParseError("graph6: non-zero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph from_edge_list(std::string_view text) {
    std::vector<std::vector<std::string_view>> rows;
    for (auto line : lines_of(text)) {
        auto toks = split_ws(line);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw ParseError("edge-list: missing 'n m' header");
    auto read_pair = [](const std::vector<std::string_view>& toks, const char* what) {
        if (toks.size() != 2) throw ParseError(std::string("edge-list: ") + what + " line needs two integers");
        auto a = parse_nonneg(toks[0]);
        auto b = parse_nonneg(toks[1]);
        if (!a || !b) throw ParseError(std::string("edge-list: ") + what + " tokens must be non-negative integers");
        return std::pair<long, long>{*a, *b};
    };
    auto [n, m] = read_pair(rows[0], "header");
    if (n > kMaxVertices) throw ParseError("edge-list: graph too large");
    if (static_cast<long>(rows.size()) - 1 != m)
        throw ParseError("edge-list: header promises " + std::to_string(m) + " edges, found " +
                         std::to_string(rows.size() - 1));
    std::vector<Edge> edges;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        auto [u, v] = read_pair(rows[r], "edge");
        if (u >= n || v >= n) throw GraphError("edge-list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

GraphFormat detect_format(std::string_view text) {
    for (auto line : lines_of(text)) {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        return toks.size() == 2 && parse_nonneg(toks[0]) && parse_nonneg(toks[1]) ? GraphFormat::EdgeList
                                                                                  : GraphFormat::Graph6;
    }
    return GraphFormat::Graph6;
}

Graph parse_graph(const GraphDocument& doc) {
    return doc.format == GraphFormat::Graph6 ? from_graph6(doc.payload) : from_edge_list(doc.payload);
}

GraphDocument emit_graph(const Graph& g, GraphFormat format) {
    return {format, format == GraphFormat::Graph6 ? to_graph6(g) : to_edge_list(g)};
}

}  // namespace secdom
