#include <doctest.h>

#include <algorithm>

#include "srgpst/parity.hpp"

using namespace srgpst;

namespace {

PerturbSpec param_spec(bool adjacent, const mpq_class& beta, const mpq_class& gamma) {
    PerturbSpec s;
    s.u = 0;
    s.v = 1;
    s.beta = beta;
    s.gamma = gamma;
    s.adjacent = adjacent;
    return s;
}

struct Frozen {
    long n, k, a, c;
    bool adjacent;
    long beta_num, beta_den;
    long p, q, alpha, a_term, b_term;
    long lambda1, lambda2;
    std::vector<mpq_class> ratios;  // sorted ascending in the checks
    unsigned long r;
    mpq_class time;
};

// Independently derived transfer data for the eight parameter-set/pair/beta
// combinations with perfect state transfer at small denominators; every value
// was cross-checked against a floating-point walk simulation.
std::vector<Frozen> frozen_instances() {
    return {
        // Clebsch parameters, non-adjacent, beta = 2.
        {16, 5, 0, 2, false, 2, 1, -4, 1, 4, -6, 2, -1, -5,
         {mpq_class(-3, 2), mpq_class(-1, 2), mpq_class(1, 2)}, 1, mpq_class(1, 2)},
        // OA(3,4) parameters, non-adjacent, beta = 2.
        {16, 9, 4, 6, false, 2, 1, -4, 1, 4, -6, 2, -1, -5,
         {mpq_class(-5, 2), mpq_class(-1, 2), mpq_class(1, 2)}, 1, mpq_class(1, 2)},
        // Complement-of-Clebsch parameters, adjacent, beta = -2.
        {16, 10, 6, 6, true, -2, 1, 4, 1, 4, -2, 6, 4, 0,
         {mpq_class(-3, 2), mpq_class(1, 2), mpq_class(3, 2)}, 1, mpq_class(1, 2)},
        // OA(2,4) parameters, adjacent, beta = -2.
        {16, 6, 2, 2, true, -2, 1, 4, 1, 4, -2, 6, 4, 0,
         {mpq_class(-1, 2), mpq_class(1, 2), mpq_class(3, 2)}, 1, mpq_class(1, 2)},
        // OA(2,8) parameters, non-adjacent, beta = -4.
        {64, 14, 6, 2, false, -4, 1, 8, 1, 8, -4, 12, 10, 2,
         {mpq_class(-1, 2), mpq_class(1, 2), mpq_class(3, 2)}, 1, mpq_class(1, 4)},
        // OA(2,8) parameters, adjacent, beta = -6.
        {64, 14, 6, 2, true, -6, 1, 12, 1, 8, -2, 14, 12, 4,
         {mpq_class(-1, 4), mpq_class(3, 4), mpq_class(7, 4)}, 2, mpq_class(1, 2)},
        // OA(3,8) parameters, non-adjacent, beta = -2.
        {64, 21, 8, 6, false, -2, 1, 4, 1, 8, -6, 10, 7, -1,
         {mpq_class(-7, 4), mpq_class(1, 4), mpq_class(5, 4)}, 2, mpq_class(1, 2)},
        // OA(3,8) parameters, adjacent, beta = -4.
        {64, 21, 8, 6, true, -4, 1, 8, 1, 8, -4, 12, 9, 1,
         {mpq_class(-3, 2), mpq_class(1, 2), mpq_class(3, 2)}, 1, mpq_class(1, 4)},
    };
}

}  // namespace

TEST_SUITE("parity") {

TEST_CASE("frozen witness data for every small perfect-transfer instance") {
    for (const Frozen& f : frozen_instances()) {
        CAPTURE(f.n);
        CAPTURE(f.k);
        CAPTURE(f.adjacent);
        const SrgParams params = srg_from_params(f.n, f.k, f.a, f.c);
        const mpq_class beta(f.beta_num, f.beta_den);
        const auto spectrum =
            srg_perturbed_polys(params, param_spec(f.adjacent, beta, -beta));
        const ParityWitness w = pst_parity_check(spectrum);
        REQUIRE(w.parity_ok);
        CHECK(w.p == f.p);
        CHECK(w.q == f.q);
        CHECK(w.discriminant_square);
        CHECK(w.alpha == f.alpha);
        CHECK(w.a_term == f.a_term);
        CHECK(w.b_term == f.b_term);
        CHECK(w.lambda1.as_rational() == f.lambda1);
        CHECK(w.lambda2.as_rational() == f.lambda2);
        CHECK(w.r == f.r);
        // The defining identities of the witness integers.
        CHECK(w.b_term - w.a_term == 2 * w.alpha);
        std::vector<mpq_class> got;
        for (const auto& entry : w.ratios) {
            REQUIRE(entry.ratio_rational);
            CHECK(entry.numerator_odd);
            got.push_back(entry.ratio);
        }
        std::sort(got.begin(), got.end());
        CHECK(got == f.ratios);
        CHECK(pst_time_pi_multiple(w) == f.time);
    }
}

TEST_CASE("witness product identity ties alpha to the eigenvalue product") {
    // A * B = 4 q^2 * prod where prod multiplies the (shifted) eigenvalues.
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    auto w = pst_parity_check(srg_perturbed_polys(clebsch, param_spec(false, 2, -2)));
    CHECK(w.a_term * w.b_term == 4 * w.q * w.q * mpz_class(1 * -3));  // theta*tau
    const SrgParams comp = srg_from_params(16, 10, 6, 6);
    w = pst_parity_check(srg_perturbed_polys(comp, param_spec(true, -2, 2)));
    CHECK(w.a_term * w.b_term == 4 * w.q * w.q * mpz_class(3 * -1));  // (theta+1)(tau+1)
}

TEST_CASE("parity fails with explicit reasons off the transfer locus") {
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    // Mirror-image point: skew discriminant 48 is not a perfect square.
    auto w = pst_parity_check(srg_perturbed_polys(clebsch, param_spec(false, -2, 2)));
    CHECK_FALSE(w.parity_ok);
    CHECK_FALSE(w.discriminant_square);
    CHECK_FALSE(w.failure.empty());
    CHECK_THROWS_AS(pst_time_pi_multiple(w), ExactError);

    // gamma = 0 leaves an irreducible balanced cubic: irrational ratios.
    w = pst_parity_check(srg_perturbed_polys(clebsch, param_spec(false, 1, 0)));
    CHECK_FALSE(w.parity_ok);

    // Petersen never passes on a rational beta = -gamma grid.
    const SrgParams petersen = srg_from_params(10, 3, 0, 1);
    for (long num = -6; num <= 6; ++num)
        for (long den = 1; den <= 3; ++den) {
            if (num == 0) continue;
            const mpq_class beta(num, den);
            const auto sp = srg_perturbed_polys(petersen, param_spec(false, beta, -beta));
            CHECK_FALSE(pst_parity_check(sp).parity_ok);
        }
}

TEST_CASE("synthesis finds the canonical candidate and only verified ones") {
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    const SynthesisResult result = synthesize_beta_nonadjacent(clebsch);
    REQUIRE(result.possible);
    CHECK(result.impossible_reason.empty());
    const bool canonical = std::any_of(result.candidates.begin(), result.candidates.end(),
                                       [](const PstCandidate& c) { return c.beta == 2; });
    CHECK(canonical);
    // Candidates arrive deduplicated, each re-verifiable from scratch.
    std::vector<mpq_class> betas;
    for (const auto& cand : result.candidates) {
        betas.push_back(cand.beta);
        CHECK(cand.gamma == -cand.beta);
        CHECK(cand.witness.parity_ok);
    }
    std::sort(betas.begin(), betas.end());
    CHECK(std::adjacent_find(betas.begin(), betas.end()) == betas.end());
    for (size_t i = 0; i < result.candidates.size(); i += 97) {
        const auto& cand = result.candidates[i];
        const auto sp =
            srg_perturbed_polys(clebsch, param_spec(false, cand.beta, cand.gamma));
        CHECK(strong_cospectrality(clebsch, param_spec(false, cand.beta, cand.gamma))
                  .strongly_cospectral);
        const ParityWitness w = pst_parity_check(sp);
        CHECK(w.parity_ok);
        CHECK(pst_time_pi_multiple(w) == cand.time_pi_multiple);
    }
}

TEST_CASE("synthesis bound is honoured and extends monotonically") {
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    const auto small = synthesize_beta_nonadjacent(clebsch, 9);
    const auto large = synthesize_beta_nonadjacent(clebsch, 25);
    CHECK(small.possible);
    CHECK(small.candidates.size() < large.candidates.size());
    for (const auto& cand : small.candidates)
        CHECK(std::any_of(large.candidates.begin(), large.candidates.end(),
                          [&](const PstCandidate& c) { return c.beta == cand.beta; }));
}

TEST_CASE("synthesis reports structural impossibility with the reason") {
    const SrgParams petersen = srg_from_params(10, 3, 0, 1);
    const auto non = synthesize_beta_nonadjacent(petersen);
    CHECK_FALSE(non.possible);
    CHECK(non.impossible_reason.find("2-adic") != std::string::npos);
    const auto adj = synthesize_beta_adjacent(petersen);
    CHECK_FALSE(adj.possible);

    // OA(2,4) parameters: adjacent works, non-adjacent cannot.
    const SrgParams oa24 = srg_from_params(16, 6, 2, 2);
    CHECK(synthesize_beta_adjacent(oa24).possible);
    const auto oa_non = synthesize_beta_nonadjacent(oa24);
    CHECK_FALSE(oa_non.possible);
    CHECK(oa_non.impossible_reason.find("mod 4") != std::string::npos);

    // Conference parameters are rejected as irrational.
    CHECK_THROWS_AS(synthesize_beta_nonadjacent(srg_from_params(5, 2, 0, 1)), ExactError);
}

TEST_CASE("orthogonal-array predicate matches the synthesizer verdicts") {
    struct Case {
        long rows, n;
        long pn, pk, pa, pc;  // block-graph parameters
    };
    const std::vector<Case> cases = {
        {2, 4, 16, 6, 2, 2},   {2, 5, 25, 8, 3, 2},   {2, 6, 36, 10, 4, 2},
        {2, 8, 64, 14, 6, 2},  {3, 4, 16, 9, 4, 6},   {3, 5, 25, 12, 5, 6},
        {3, 8, 64, 21, 8, 6},  {4, 5, 25, 16, 9, 12}, {4, 7, 49, 24, 11, 12},
    };
    for (const auto& c : cases) {
        CAPTURE(c.rows);
        CAPTURE(c.n);
        const SrgParams p = srg_from_params(c.pn, c.pk, c.pa, c.pc);
        CHECK(oa_pst_predicate(c.rows, c.n, false) ==
              synthesize_beta_nonadjacent(p).possible);
        CHECK(oa_pst_predicate(c.rows, c.n, true) == synthesize_beta_adjacent(p).possible);
    }
    CHECK_THROWS_AS(oa_pst_predicate(1, 4, false), ExactError);
    CHECK_THROWS_AS(oa_pst_predicate(2, 1, false), ExactError);
}

TEST_CASE("prime powers are classified correctly") {
    for (long q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 121}) CHECK(is_prime_power(q));
    for (long q : {1, 6, 10, 12, 15, 100}) CHECK_FALSE(is_prime_power(q));
}

TEST_CASE("affine polar predicate is exactly the even-characteristic test") {
    for (long e : {2, 3})
        for (long q : {2, 3, 4, 5, 7, 8, 9})
            for (int eps : {-1, 1}) {
                CAPTURE(e);
                CAPTURE(q);
                CAPTURE(eps);
                CHECK(affine_polar_pst_predicate(e, q, eps) == (q % 2 == 0));
            }
    CHECK_THROWS_AS(affine_polar_pst_predicate(2, 6, -1), ExactError);
    CHECK_THROWS_AS(affine_polar_pst_predicate(1, 2, -1), ExactError);
    CHECK_THROWS_AS(affine_polar_pst_predicate(2, 2, 0), ExactError);
}

TEST_CASE("elliptic quadric on sixteen points is the Clebsch parameter set") {
    // VO^-(4, 2) has parameters (16, 5, 0, 2); the family predicate must agree
    // with a direct synthesis on those parameters.
    const SrgParams clebsch = srg_from_params(16, 5, 0, 2);
    CHECK(affine_polar_pst_predicate(2, 2, -1) ==
          synthesize_beta_nonadjacent(clebsch).possible);
    // VO^+(4, 2) has parameters (16, 9, 4, 6) = OA(3, 4).
    const SrgParams oa34 = srg_from_params(16, 9, 4, 6);
    CHECK(affine_polar_pst_predicate(2, 2, 1) == synthesize_beta_nonadjacent(oa34).possible);
}

}  // TEST_SUITE
