#include "idcodes/graph6.hpp"

#include <istream>
#include <sstream>

namespace idcodes {

namespace {

constexpr const char* kHeader = ">>graph6<<";

int decode_byte(char c, const std::string& line) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw std::runtime_error("graph6: malformed byte " + std::to_string(int(b)) + " in \"" + line + "\"");
    return b - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(kHeader, 0) == 0) line = line.substr(std::string(kHeader).size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw std::runtime_error("graph6: empty line");

    size_t pos = 0;
    long long n = decode_byte(line[pos++], line);
    if (n == 63) {
        if (line.size() < 4) throw std::runtime_error("graph6: truncated size field in \"" + line + "\"");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(line[pos++], line);
    }

    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != need)
        throw std::runtime_error("graph6: size mismatch, order " + std::to_string(n) + " needs " +
                                 std::to_string(need) + " payload bytes, got " +
                                 std::to_string(line.size() - pos));

    std::vector<std::pair<int, int>> edges;
    long long bit_index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit_index) {
            int byte = decode_byte(line[pos + bit_index / 6], line);
            if ((byte >> (5 - bit_index % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::runtime_error("graph6: order too large to write");
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    auto next_data_line = [&](std::string& line) {
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream probe(line);
            std::string token;
            if (probe >> token) return true;
        }
        return false;
    };
    std::string line;
    if (!next_data_line(line)) throw std::runtime_error("edge list: missing \"n m\" header");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list: bad header \"" + line + "\"");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(line)) throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges");
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) throw std::runtime_error("edge list: bad edge line \"" + line + "\"");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace idcodes
