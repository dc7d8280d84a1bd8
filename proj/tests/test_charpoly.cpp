#include <doctest.h>

#include <random>

#include "srgpst/charpoly.hpp"
#include "srgpst/orthogonal_array.hpp"

using namespace srgpst;

namespace {

RatPoly poly(std::initializer_list<long> lowest_first) {
    std::vector<mpq_class> c;
    for (long v : lowest_first) c.emplace_back(v);
    return RatPoly(std::move(c));
}

LabeledGraph random_graph(std::mt19937& rng, int n, double p) {
    LabeledGraph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.set_edge(u, v);
    return g;
}

}  // namespace

TEST_SUITE("charpoly") {

TEST_CASE("bareiss determinant on known matrices") {
    CHECK(bareiss_determinant({{mpz_class(3)}}) == 3);
    CHECK(bareiss_determinant({{mpz_class(1), mpz_class(2)}, {mpz_class(3), mpz_class(4)}}) == -2);
    // Singular matrix.
    CHECK(bareiss_determinant({{mpz_class(1), mpz_class(2)}, {mpz_class(2), mpz_class(4)}}) == 0);
    // Needs a row swap to pivot.
    CHECK(bareiss_determinant({{mpz_class(0), mpz_class(1)}, {mpz_class(1), mpz_class(0)}}) == -1);
    // Vandermonde 4x4 on 1, 2, 3, 4: product of differences = 12.
    std::vector<std::vector<mpz_class>> vm(4, std::vector<mpz_class>(4));
    for (int i = 0; i < 4; ++i) {
        mpz_class power = 1;
        for (int j = 0; j < 4; ++j) {
            vm[i][j] = power;
            power *= (i + 1);
        }
    }
    CHECK(bareiss_determinant(vm) == 12);
}

TEST_CASE("characteristic polynomials of small named graphs") {
    // K2: t^2 - 1.
    CHECK(charpoly(complete_graph(2)) == poly({-1, 0, 1}));
    // C5: t^5 - 5t^3 + 5t - 2.
    CHECK(charpoly(cycle_graph(5)) == poly({-2, 5, 0, -5, 0, 1}));
    // Petersen: (t-3)(t-1)^5(t+2)^4.
    RatPoly pet = RatPoly::from_roots({mpq_class(3)});
    for (int i = 0; i < 5; ++i) pet = pet * RatPoly::from_roots({mpq_class(1)});
    for (int i = 0; i < 4; ++i) pet = pet * RatPoly::from_roots({mpq_class(-2)});
    CHECK(charpoly(petersen_graph()) == pet);
    // Clebsch: (t-5)(t-1)^10(t+3)^5.
    RatPoly cle = RatPoly::from_roots({mpq_class(5)});
    for (int i = 0; i < 10; ++i) cle = cle * RatPoly::from_roots({mpq_class(1)});
    for (int i = 0; i < 5; ++i) cle = cle * RatPoly::from_roots({mpq_class(-3)});
    CHECK(charpoly(clebsch_graph()) == cle);
}

TEST_CASE("rational charpoly agrees with integer charpoly after scaling") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 4 + trial;
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                m[i][j] = mpq_class(num(rng), den(rng));
                m[i][j].canonicalize();
                m[j][i] = m[i][j];
            }
        const RatPoly p = charpoly_rational(m);
        CHECK(p.degree() == n);
        CHECK(p.leading() == 1);
        // Trace check: coefficient of t^{n-1} is minus the trace.
        mpq_class tr = 0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        CHECK(p.coeff(n - 1) == -tr);
    }
}

TEST_CASE("cofactor identity ties the phi family together") {
    std::mt19937 rng(20240818);
    std::vector<LabeledGraph> corpus = {petersen_graph(), cycle_graph(6), prism_graph(),
                                        complete_graph(4), oa_graph(2, 3)};
    for (int i = 0; i < 3; ++i) corpus.push_back(random_graph(rng, 7 + i, 0.4));
    for (const auto& g : corpus) {
        std::uniform_int_distribution<int> pick(0, g.n() - 1);
        for (int rep = 0; rep < 3; ++rep) {
            int u = pick(rng), v = pick(rng);
            if (u == v) continue;
            const PhiFamily f = phi_polys(g, u, v);
            CHECK(f.phi_uv * f.phi_uv == f.phi_u * f.phi_v - f.phi * f.phi_pair);
            CHECK(f.phi.degree() == g.n());
            CHECK(f.phi_u.degree() == g.n() - 1);
            CHECK(f.phi_pair.degree() == g.n() - 2);
        }
    }
}

TEST_CASE("phi_uv on an edge has positive leading behaviour") {
    // K2 at (0, 1): phi_uv = 1 exactly (the off-diagonal cofactor of tI - A).
    const PhiFamily f = phi_polys(complete_graph(2), 0, 1);
    CHECK(f.phi_uv == poly({1}));
    CHECK(f.phi == poly({-1, 0, 1}));
    CHECK(f.phi_u == poly({0, 1}));
    CHECK(f.phi_pair == poly({1}));
}

TEST_CASE("one-walk-regularity holds for SRGs and fails for the prism") {
    CHECK(is_one_walk_regular(petersen_graph()));
    CHECK(is_one_walk_regular(clebsch_graph()));
    CHECK(is_one_walk_regular(complete_graph(5)));
    CHECK(is_one_walk_regular(cycle_graph(6)));  // vertex- and edge-transitive
    CHECK_FALSE(is_one_walk_regular(prism_graph()));
    CHECK_FALSE(is_one_walk_regular(parse_graph6("D?{")));  // irregular star
}

}  // TEST_SUITE
