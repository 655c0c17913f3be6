#include "grundy/graph6.hpp"

#include <sstream>
#include <vector>

namespace grundy {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int data_byte(std::string_view line, size_t pos) {
    unsigned char b = static_cast<unsigned char>(line[pos]);
    if (b < 63 || b > 126)
        throw FormatError("graph6: byte " + std::to_string(int(b)) + " at position " +
                          std::to_string(pos) + " outside the printable range 63..126");
    return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, int max_vertices) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw FormatError("graph6: empty input");
    if (line[0] == ':' || line[0] == ';')
        throw FormatError("graph6: sparse6 input is not supported");
    if (line[0] == '&') throw FormatError("graph6: digraph6 input is not supported");

    size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = data_byte(line, 0);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw FormatError("graph6: 8-byte vertex count exceeds the supported size");
        if (line.size() < 4) throw FormatError("graph6: truncated vertex count");
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | data_byte(line, pos);
    }
    if (n > max_vertices)
        throw FormatError("graph6: " + std::to_string(n) +
                          " vertices exceeds the supported size " + std::to_string(max_vertices));

    const long pair_bits = n * (n - 1) / 2;
    const size_t payload = size_t((pair_bits + 5) / 6);
    if (line.size() - pos != payload)
        throw FormatError("graph6: expected " + std::to_string(payload) +
                          " payload bytes for n=" + std::to_string(n) + ", got " +
                          std::to_string(line.size() - pos));

    std::vector<std::pair<int, int>> es;
    long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (data_byte(line, pos + size_t(k / 6)) >> (5 - k % 6) & 1)
                es.emplace_back(u, v);
    for (; k < long(payload) * 6; ++k)
        if (data_byte(line, pos + size_t(k / 6)) >> (5 - k % 6) & 1)
            throw FormatError("graph6: nonzero padding bits");
    return Graph::from_edges(int(n), es);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else {
        out.push_back('~');
        out.push_back(char(63 + (n >> 12 & 63)));
        out.push_back(char(63 + (n >> 6 & 63)));
        out.push_back(char(63 + (n & 63)));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = group << 1 | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(63 + group));
                group = filled = 0;
            }
        }
    if (filled) out.push_back(char(63 + (group << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text, int max_vertices) {
    std::istringstream in{std::string(text)};
    long n = 0, m = 0;
    if (!(in >> n >> m)) throw FormatError("edge list: expected header \"n m\"");
    if (n < 0 || n > max_vertices)
        throw FormatError("edge list: " + std::to_string(n) +
                          " vertices exceeds the supported size " + std::to_string(max_vertices));
    if (m < 0) throw FormatError("edge list: negative edge count");
    std::vector<std::pair<int, int>> es;
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!(in >> u >> v))
            throw FormatError("edge list: expected " + std::to_string(m) +
                              " edges, input ended after " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError("edge list: endpoint out of range in edge " + std::to_string(i));
        es.emplace_back(int(u), int(v));
    }
    std::string trailing;
    if (in >> trailing) throw FormatError("edge list: trailing data after the last edge");
    try {
        return Graph::from_edges(int(n), es);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("edge list: ") + e.what());
    }
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace grundy
