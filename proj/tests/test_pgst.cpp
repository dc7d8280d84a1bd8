#include <doctest.h>

#include "srgpst/pgst.hpp"

using namespace srgpst;

namespace {

RatPoly poly(std::initializer_list<long> lowest_first) {
    std::vector<mpq_class> c;
    for (long v : lowest_first) c.emplace_back(v);
    return RatPoly(std::move(c));
}

PerturbSpec param_spec(bool adjacent, const mpq_class& beta, const mpq_class& gamma) {
    PerturbSpec s;
    s.u = 0;
    s.v = 1;
    s.beta = beta;
    s.gamma = gamma;
    s.adjacent = adjacent;
    return s;
}

}  // namespace

TEST_SUITE("pgst") {

TEST_CASE("quadratic and cubic irreducibility over the rationals") {
    CHECK(irreducible_over_rationals(poly({-1, 3, 1})));        // t^2 + 3t - 1
    CHECK(irreducible_over_rationals(poly({-5, 1, 1})));        // t^2 + t - 5
    CHECK_FALSE(irreducible_over_rationals(poly({5, 6, 1})));   // (t+1)(t+5)
    CHECK(irreducible_over_rationals(poly({21, -10, -4, 1})));  // no rational root
    CHECK_FALSE(irreducible_over_rationals(poly({15, -13, -3, 1})));  // (t-5)(t-1)(t+3)
    CHECK(irreducible_over_rationals(poly({2, 0, 0, 1})));      // t^3 + 2
    CHECK_THROWS_AS(irreducible_over_rationals(poly({1, 1})), ExactError);
    CHECK_THROWS_AS(irreducible_over_rationals(poly({0, 0, 0, 0, 1})), ExactError);
}

TEST_CASE("irreducible factors with distinct means certify pretty good transfer") {
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    auto d = pgst_certify(clebsch, param_spec(false, 1, 0));
    REQUIRE(d.pgst);
    CHECK(d.evidence.method == "irreducible-factors");
    CHECK(d.evidence.skew_irreducible);
    CHECK(d.evidence.balanced_irreducible);
    CHECK(d.evidence.skew_mean == mpq_class(-3, 2));
    CHECK(d.evidence.balanced_mean == mpq_class(4, 3));
    CHECK(d.evidence.means_differ);

    d = pgst_certify(clebsch, param_spec(false, -1, 0));
    REQUIRE(d.pgst);
    CHECK(d.evidence.skew_mean == mpq_class(-1, 2));
    CHECK(d.evidence.balanced_mean == mpq_class(2, 3));
}

TEST_CASE("perfect transfer implies pretty good transfer when factors split") {
    const SrgParams oa34 = srg_from_params(16, 9, 4, 6);
    const auto d = pgst_certify(oa34, param_spec(false, 2, -2));
    REQUIRE(d.pgst);
    CHECK(d.evidence.method == "pst-implies-pgst");
    REQUIRE(d.evidence.pst_witness.has_value());
    CHECK(d.evidence.pst_witness->parity_ok);
}

TEST_CASE("coinciding root averages block the interlacing argument") {
    // beta = -5/2, gamma = -1/2 makes both factors irreducible (t^2 - 7 and
    // t^3 - 22t - 3) with common root average zero.
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    const auto d = pgst_certify(clebsch, param_spec(false, mpq_class(-5, 2), mpq_class(-1, 2)));
    CHECK_FALSE(d.pgst);
    CHECK(d.failure == "factor root averages coincide");
    CHECK(d.evidence.skew_mean == 0);
    CHECK(d.evidence.balanced_mean == 0);
    CHECK(d.evidence.skew_irreducible);
    CHECK(d.evidence.balanced_irreducible);
}

TEST_CASE("strong cospectrality failures propagate into the decision") {
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    const auto d = pgst_certify(clebsch, param_spec(false, mpq_class(-1, 2), -2));
    CHECK_FALSE(d.pgst);
    CHECK(d.failure.find("not strongly cospectral") != std::string::npos);
}

TEST_CASE("reducible factors without parity stay unresolved") {
    // The mirror point of the Clebsch transfer instance: balanced factor
    // splits, parity fails, so no pretty-good certificate is available.
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    const auto d = pgst_certify(clebsch, param_spec(false, -2, 2));
    CHECK_FALSE(d.pgst);
    CHECK_FALSE(d.failure.empty());
}

TEST_CASE("fidelity scan improves with the horizon on the reference instance") {
    const LabeledGraph g = clebsch_graph();
    const auto spec = make_spec(g, false, 1, 0);
    const auto short_scan = fidelity_scan(g, spec, 10.0, 0.01);
    const auto long_scan = fidelity_scan(g, spec, 100.0, 0.01);
    CHECK(short_scan.best_fidelity == doctest::Approx(0.8998).epsilon(1e-3));
    CHECK(long_scan.best_fidelity == doctest::Approx(0.9664).epsilon(1e-3));
    CHECK(short_scan.best_fidelity < long_scan.best_fidelity);
    CHECK(long_scan.best_time == doctest::Approx(53.9).epsilon(1e-2));
    // Deterministic: repeated scans return bit-identical results.
    const auto again = fidelity_scan(g, spec, 10.0, 0.01);
    CHECK(again.best_time == short_scan.best_time);
    CHECK(again.best_fidelity == short_scan.best_fidelity);
}

}  // TEST_SUITE
