#include "srgpst/graph.hpp"

#include <algorithm>
#include <queue>

namespace srgpst {

size_t LabeledGraph::index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("vertex out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") on " + std::to_string(n_) + " vertices");
    return static_cast<size_t>(u) * n_ + v;
}

void LabeledGraph::set_edge(int u, int v, bool present) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[index(u, v)] = adj_[index(v, u)] = present ? 1 : 0;
}

int LabeledGraph::degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += adj_[index(u, v)];
    return d;
}

int LabeledGraph::regular_degree() const {
    if (n_ == 0) return 0;
    const int k = degree(0);
    for (int u = 1; u < n_; ++u)
        if (degree(u) != k) return -1;
    return k;
}

bool LabeledGraph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v) && !seen[v]) {
                seen[v] = 1;
                ++count;
                frontier.push(v);
            }
    }
    return count == n_;
}

bool LabeledGraph::is_complete() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) return false;
    return true;
}

LabeledGraph LabeledGraph::complement() const {
    LabeledGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) g.set_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::pair<int, int> LabeledGraph::first_pair(bool want_adjacent) const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v) == want_adjacent) return {u, v};
    throw std::invalid_argument(want_adjacent ? "graph has no edges" : "graph has no non-adjacent pairs");
}

// ---- graph6 ---------------------------------------------------------------

namespace {

constexpr int kBias = 63;  // printable 6-bit bytes are 63..126

int decode_byte(const std::string& text, size_t pos) {
    if (pos >= text.size()) throw Graph6Error(pos, "unexpected end of input");
    const unsigned char b = static_cast<unsigned char>(text[pos]);
    if (b < 63 || b > 126)
        throw Graph6Error(pos, "byte out of printable graph6 range 63..126");
    return b - kBias;
}

}  // namespace

LabeledGraph parse_graph6(const std::string& text) {
    size_t pos = 0;
    if (text.rfind(">>graph6<<", 0) == 0) pos = 10;  // optional header
    if (pos >= text.size()) throw Graph6Error(pos, "empty graph6 string");

    long long n = 0;
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = decode_byte(text, pos);
        ++pos;
    } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) != 126) {
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text, pos + i);
        if (n < 63) throw Graph6Error(pos, "non-minimal 3-byte vertex count encoding");
        pos += 4;
    } else {
        for (int i = 2; i <= 7; ++i) n = (n << 6) | decode_byte(text, pos + i);
        if (n < 258048) throw Graph6Error(pos, "non-minimal 6-byte vertex count encoding");
        pos += 8;
    }
    if (n > 100000) throw Graph6Error(0, "vertex count too large: " + std::to_string(n));

    LabeledGraph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const size_t body = static_cast<size_t>((bits + 5) / 6);
    if (text.size() - pos != body)
        throw Graph6Error(text.size(),
                          "body length " + std::to_string(text.size() - pos) + ", expected " +
                              std::to_string(body) + " bytes for " + std::to_string(n) + " vertices");

    long long bit = 0;
    int u = 0, v = 1;  // column-major upper triangle: (0,1), (0,2), (1,2), ...
    for (size_t i = 0; i < body; ++i) {
        const int value = decode_byte(text, pos + i);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (value >> shift) & 1;
            if (bit < bits) {
                if (set) g.set_edge(u, v);
                ++u;
                if (u == v) {
                    u = 0;
                    ++v;
                }
            } else if (set) {
                throw Graph6Error(pos + i, "nonzero padding bits");
            }
        }
    }
    return g;
}

std::string emit_graph6(const LabeledGraph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

// ---- constructions --------------------------------------------------------

LabeledGraph complete_graph(int n) {
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

LabeledGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u) g.set_edge(u, (u + 1) % n);
    return g;
}

LabeledGraph petersen_graph() {
    LabeledGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.set_edge(i, (i + 1) % 5);          // outer pentagon
        g.set_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.set_edge(i, 5 + i);                // spokes
    }
    return g;
}

LabeledGraph clebsch_graph() {
    LabeledGraph g(16);
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) {
            const int w = __builtin_popcount(u ^ v);
            if (w == 1 || w == 4) g.set_edge(u, v);
        }
    return g;
}

LabeledGraph prism_graph() {
    LabeledGraph g(6);
    for (int i = 0; i < 3; ++i) {
        g.set_edge(i, (i + 1) % 3);
        g.set_edge(3 + i, 3 + (i + 1) % 3);
        g.set_edge(i, 3 + i);
    }
    return g;
}

LabeledGraph paley_graph(int q) {
    if (q < 5 || q % 4 != 1) throw std::invalid_argument("paley graph needs q = 1 mod 4, q >= 5");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("paley graph here supports prime q only");
    std::vector<char> is_square(q, 0);
    for (int x = 1; x < q; ++x) is_square[static_cast<long long>(x) * x % q] = 1;
    LabeledGraph g(q);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (is_square[(v - u) % q]) g.set_edge(u, v);
    return g;
}

}  // namespace srgpst
