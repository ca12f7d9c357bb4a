#include "ic/graph6.hpp"

#include <string>

#include "ic/errors.hpp"

namespace ic {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
}

int sextet(std::string_view text, std::size_t pos) {
    int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
    return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    std::string_view body = text.substr(base);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
    if (body.empty()) throw ParseError("graph6: empty code", base);

    std::size_t pos = 0;
    int n = 0;
    if (static_cast<unsigned char>(body[0]) == 126) {
        if (body.size() < 4) throw ParseError("graph6: truncated size field", base + body.size());
        if (static_cast<unsigned char>(body[1]) == 126) throw ParseError("graph6: order above 258047 unsupported", base + 1);
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(text, base + k);
        pos = 4;
    } else {
        n = sextet(text, base);
        pos = 1;
    }
    if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds 128", base);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (body.size() - pos != need) {
        std::size_t at = body.size() - pos < need ? body.size() : pos + need;
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                             std::to_string(body.size() - pos),
                         base + at);
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int s = sextet(text, base + pos + bit / 6);
            if ((s >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        std::size_t last = pos + need - 1;
        int s = sextet(text, base + last);
        int pad = static_cast<int>(6 - bits % 6);
        if ((s & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", base + last);
    }
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace ic
