#pragma once
// Orthogonal arrays OA(k, n) of strength 2 and index 1, and their block
// graphs: n^2 columns, adjacent when they agree in exactly one of the k
// coordinates. Supported constructions:
//   k = 2           any n >= 2 (the rook's graph / line graph of K_{n,n}),
//   k = 3           any n >= 2 via the cyclic Latin square,
//   4 <= k <= n+1   prime n via the field-slope Latin squares (m*i + j mod n).
// Columns are emitted in lexicographic order of (i, j), so vertex i*n + j
// carries column (i, j, L_1[i][j], ...).

#include <vector>

#include "srgpst/graph.hpp"

namespace srgpst {

// The k x n^2 array itself; rows[r][i*n+j] is symbol r of column (i, j).
std::vector<std::vector<int>> orthogonal_array(int k, int n);

// Its block graph. Throws std::invalid_argument("unsupported-parameters: ...")
// outside the constructible range.
LabeledGraph oa_graph(int k, int n);

bool is_prime(long long n);

}  // namespace srgpst
