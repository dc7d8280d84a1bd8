#pragma once
// Simple undirected graphs on vertex set {0, ..., n-1} with a dense adjacency
// matrix, plus graph6 text I/O and the named constructions used throughout.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace srgpst {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(size_t byte_offset, const std::string& what)
        : std::runtime_error("graph6 byte " + std::to_string(byte_offset) + ": " + what),
          offset(byte_offset) {}
    size_t offset;
};

class LabeledGraph {
public:
    explicit LabeledGraph(int n = 0) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
    void set_edge(int u, int v, bool present = true);
    int degree(int u) const;
    // Common regular degree, or -1 when the graph is irregular.
    int regular_degree() const;
    bool is_connected() const;
    bool is_complete() const;
    LabeledGraph complement() const;
    std::vector<std::pair<int, int>> edges() const;

    // First pair (u, v), u < v, with the requested adjacency, in
    // lexicographic order; throws when no such pair exists.
    std::pair<int, int> first_pair(bool adjacent) const;

    bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    size_t index(int u, int v) const;
    int n_;
    std::vector<uint8_t> adj_;
};

// graph6 codec (the de-facto exchange format: 6-bit printable bytes 63..126,
// upper-triangle column-major bit order). parse rejects malformed input with
// the offending byte offset; emit(parse(s)) == s for canonical strings.
LabeledGraph parse_graph6(const std::string& text);
std::string emit_graph6(const LabeledGraph& g);

// Named constructions.
LabeledGraph complete_graph(int n);
LabeledGraph cycle_graph(int n);
LabeledGraph petersen_graph();
// Folded 5-cube on F_2^4: SRG(16, 5, 0, 2).
LabeledGraph clebsch_graph();
// Triangular prism: vertex-transitive but not 1-walk-regular.
LabeledGraph prism_graph();
// Paley graph on q vertices (prime q = 1 mod 4): x ~ y iff x - y is a
// nonzero square mod q.
LabeledGraph paley_graph(int q);

}  // namespace srgpst
