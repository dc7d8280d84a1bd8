#include "srgpst/charpoly.hpp"

#include <utility>

namespace srgpst {

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw ExactError("determinant of a non-square matrix");
    mpz_class prev(1);
    int sign = 1;
    for (size_t p = 0; p < n - 1; ++p) {
        if (m[p][p] == 0) {  // pivot search below row p
            size_t swap_row = p + 1;
            while (swap_row < n && m[swap_row][p] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i)
            for (size_t j = p + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;  // exact division
            }
        prev = m[p][p];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

// det(tI - M) by evaluation at distinct integer nodes plus interpolation.
// Row/column masks select a principal or off-diagonal minor of tI - M.
RatPoly charpoly_by_interpolation(const std::vector<std::vector<mpz_class>>& m,
                                  const std::vector<int>& keep_rows,
                                  const std::vector<int>& keep_cols, int t_entries, int det_sign) {
    const int points = t_entries + 1;
    std::vector<mpq_class> nodes, values;
    nodes.reserve(points);
    values.reserve(points);
    for (int node = 0; node <= t_entries; ++node) {
        std::vector<std::vector<mpz_class>> work(keep_rows.size(),
                                                 std::vector<mpz_class>(keep_cols.size()));
        for (size_t i = 0; i < keep_rows.size(); ++i)
            for (size_t j = 0; j < keep_cols.size(); ++j) {
                const int r = keep_rows[i], c = keep_cols[j];
                mpz_class entry = -m[r][c];
                if (r == c) entry += node;
                work[i][j] = entry;
            }
        nodes.emplace_back(node);
        values.emplace_back(det_sign * bareiss_determinant(std::move(work)));
    }
    return RatPoly::interpolate(nodes, values);
}

std::vector<int> all_except(int n, int skip1, int skip2) {
    std::vector<int> keep;
    keep.reserve(n);
    for (int i = 0; i < n; ++i)
        if (i != skip1 && i != skip2) keep.push_back(i);
    return keep;
}

std::vector<std::vector<mpz_class>> adjacency_matrix(const LabeledGraph& g) {
    const int n = g.n();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) m[u][v] = 1;
    return m;
}

}  // namespace

RatPoly charpoly(const std::vector<std::vector<mpz_class>>& m) {
    const int n = static_cast<int>(m.size());
    return charpoly_by_interpolation(m, all_except(n, -1, -1), all_except(n, -1, -1), n, 1);
}

RatPoly charpoly_rational(const std::vector<std::vector<mpq_class>>& m) {
    const int n = static_cast<int>(m.size());
    mpz_class scale(1);
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw ExactError("charpoly of a non-square matrix");
        for (const auto& e : row) scale = lcm(scale, mpz_class(e.get_den()));
    }
    std::vector<std::vector<mpz_class>> scaled(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class e = m[i][j] * mpq_class(scale);
            scaled[i][j] = e.get_num();
        }
    // det(tI - M) = scale^{-n} det((scale t)I - scale M).
    RatPoly big = charpoly(scaled);
    std::vector<mpq_class> coeffs(big.coeffs());
    mpq_class divider(1);  // scale^{n-i} for coefficient i
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        coeffs[i] /= divider;
        divider *= scale;
    }
    return RatPoly(std::move(coeffs));
}

RatPoly charpoly(const LabeledGraph& g) { return charpoly(adjacency_matrix(g)); }

PhiFamily phi_polys(const LabeledGraph& g, int u, int v) {
    const int n = g.n();
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw ExactError("phi_polys needs two distinct vertices in range");
    const auto m = adjacency_matrix(g);
    const auto all = all_except(n, -1, -1);
    PhiFamily f;
    f.phi = charpoly_by_interpolation(m, all, all, n, 1);
    f.phi_u = charpoly_by_interpolation(m, all_except(n, u, -1), all_except(n, u, -1), n - 1, 1);
    f.phi_v = charpoly_by_interpolation(m, all_except(n, v, -1), all_except(n, v, -1), n - 1, 1);
    f.phi_pair = charpoly_by_interpolation(m, all_except(n, u, v), all_except(n, u, v), n - 2, 1);
    // Signed cofactor: phi * ((tI-A)^{-1})_{uv} = (-1)^{u+v} det of the minor
    // with row u and column v removed. Deleting row u and column v leaves
    // n-2 diagonal t-entries; the parity factor makes the result basis-free.
    const int sign = ((u + v) % 2 == 0) ? 1 : -1;
    f.phi_uv = charpoly_by_interpolation(m, all_except(n, u, -1), all_except(n, v, -1), n - 2, sign);
    return f;
}

bool is_one_walk_regular(const LabeledGraph& g) {
    const int n = g.n();
    if (n == 0) return true;
    const auto a = adjacency_matrix(g);
    // power = A^l, starting at l = 1.
    std::vector<std::vector<mpz_class>> power = a;
    for (int l = 1; l <= n; ++l) {
        // Constant diagonal?
        for (int i = 1; i < n; ++i)
            if (power[i][i] != power[0][0]) return false;
        // Constant over edges?
        bool have_edge_value = false;
        mpz_class edge_value;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.adjacent(i, j)) {
                    if (!have_edge_value) {
                        edge_value = power[i][j];
                        have_edge_value = true;
                    } else if (power[i][j] != edge_value) {
                        return false;
                    }
                }
        if (l == n) break;
        std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
                if (power[i][t] != 0)
                    for (int j = 0; j < n; ++j)
                        if (a[t][j] != 0) next[i][j] += power[i][t] * a[t][j];
        power = std::move(next);
    }
    return true;
}

}  // namespace srgpst
