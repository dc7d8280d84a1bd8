#include "srgpst/orthogonal_array.hpp"

#include <stdexcept>
#include <string>

namespace srgpst {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::vector<int>> orthogonal_array(int k, int n) {
    auto reject = [&](const std::string& why) {
        throw std::invalid_argument("unsupported-parameters: OA(" + std::to_string(k) + ", " +
                                    std::to_string(n) + "): " + why);
    };
    if (n < 2) reject("need n >= 2");
    if (k < 2) reject("need k >= 2");
    if (k > 3 && !is_prime(n)) reject("k > 3 requires prime n (field-slope squares)");
    if (k > n + 1) reject("at most n+1 rows exist");

    std::vector<std::vector<int>> rows(k, std::vector<int>(static_cast<size_t>(n) * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int col = i * n + j;
            rows[0][col] = i;
            rows[1][col] = j;
            // Rows beyond the first two are the slope-m Latin squares
            // L_m[i][j] = m*i + j mod n; for k = 3 this is the cyclic square
            // (m = 1), valid for every n.
            for (int m = 1; m + 1 < k; ++m)
                rows[m + 1][col] = static_cast<int>((static_cast<long long>(m) * i + j) % n);
        }
    return rows;
}

LabeledGraph oa_graph(int k, int n) {
    const auto rows = orthogonal_array(k, n);
    const int N = n * n;
    LabeledGraph g(N);
    for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y) {
            int agreements = 0;
            for (int r = 0; r < k; ++r)
                if (rows[r][x] == rows[r][y]) ++agreements;
            if (agreements == 1) g.set_edge(x, y);
        }
    return g;
}

}  // namespace srgpst
