#include <doctest.h>

#include <cmath>
#include <sstream>

#include "srgpst/orthogonal_array.hpp"
#include "srgpst/walk_sim.hpp"

using namespace srgpst;

namespace {

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_SUITE("walk_sim") {

TEST_CASE("fidelity reaches one at the certified transfer times") {
    // Clebsch, non-adjacent, (2, -2), time pi/2.
    {
        const LabeledGraph g = clebsch_graph();
        CHECK(fidelity(g, make_spec(g, false, 2, -2), kPi / 2) >= 1.0 - 1e-9);
    }
    // OA(3,4) block graph, non-adjacent, (2, -2), time pi/2.
    {
        const LabeledGraph g = oa_graph(3, 4);
        CHECK(fidelity(g, make_spec(g, false, 2, -2), kPi / 2) >= 1.0 - 1e-9);
    }
    // Complement of Clebsch, adjacent, (-2, 2), time pi/2.
    {
        const LabeledGraph g = clebsch_graph().complement();
        CHECK(fidelity(g, make_spec(g, true, -2, 2), kPi / 2) >= 1.0 - 1e-9);
    }
    // OA(2,8) block graph, non-adjacent, (-4, 4), time pi/4.
    {
        const LabeledGraph g = oa_graph(2, 8);
        CHECK(fidelity(g, make_spec(g, false, -4, 4), kPi / 4) >= 1.0 - 1e-9);
    }
}

TEST_CASE("mirror-sign points fall far short of transfer") {
    const LabeledGraph g = clebsch_graph();
    CHECK(fidelity(g, make_spec(g, false, -2, 2), kPi / 2) ==
          doctest::Approx(0.363549).epsilon(1e-4));
    const LabeledGraph oa = oa_graph(3, 4);
    CHECK(fidelity(oa, make_spec(oa, false, -2, 2), kPi / 2) ==
          doctest::Approx(0.363549).epsilon(1e-4));
}

TEST_CASE("fidelity is zero at time zero between distinct vertices") {
    const LabeledGraph g = petersen_graph();
    CHECK(fidelity(g, make_spec(g, true, 0, 1), 0.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("unperturbed Petersen never transfers between neighbours") {
    const LabeledGraph g = petersen_graph();
    // beta = gamma = 0 would be the trivial perturbation for the certifier,
    // but the simulator accepts it: it is plain adjacency-matrix dynamics.
    PerturbSpec spec;
    spec.u = 0;
    spec.v = 1;
    spec.beta = 0;
    spec.gamma = 0;
    spec.adjacent = true;
    const SpectralNumeric numeric(g, spec);
    double best = 0;
    for (double t = 0; t <= 30.0; t += 0.01) best = std::max(best, numeric.fidelity(t));
    CHECK(best < 0.55);  // the supremum on this pair is 8/15
}

TEST_CASE("numeric projections reproduce the exact parity classes") {
    const LabeledGraph g = clebsch_graph();
    const SrgParams p = *verify_srg(g).params;
    const auto spec = make_spec(g, false, 2, -2);
    const auto spectrum = srg_perturbed_polys(p, spec);
    const auto report = projection_parity_check(g, spectrum);
    CHECK(report.all_match);
    REQUIRE(report.rows.size() == 5);  // distinct values 5, 1, -1, -3, -5
    for (const auto& row : report.rows) CHECK(row.matches);
    // Ascending by eigenvalue: -5 skew, -3 balanced+null, -1 skew, 1 b+n, 5 b.
    CHECK(report.rows[0].observed == "-");
    CHECK(report.rows[1].observed == "+");
    CHECK(report.rows[1].expected == "+0");
    CHECK(report.rows[2].observed == "-");
    CHECK(report.rows[3].observed == "+");
    CHECK(report.rows[4].observed == "+");
}

TEST_CASE("numeric projections confirm engineered cospectrality failures") {
    const LabeledGraph g = clebsch_graph();
    const SrgParams p = *verify_srg(g).params;
    // Skew and balanced factors share the root t = 0: the merged class must
    // project as mixed, which the numerics confirm.
    const auto spec = make_spec(g, false, mpq_class(-1, 2), -2);
    const auto spectrum = srg_perturbed_polys(p, spec);
    CHECK_FALSE(strong_cospectrality(p, spec).strongly_cospectral);
    const auto report = projection_parity_check(g, spectrum);
    CHECK(report.all_match);
    bool saw_mixed = false;
    for (const auto& row : report.rows)
        if (row.expected.find('+') != std::string::npos &&
            row.expected.find('-') != std::string::npos) {
            CHECK(row.observed == "mixed");
            saw_mixed = row.matches;
        }
    CHECK(saw_mixed);
}

TEST_CASE("decomposition is validated against reconstruction residuals") {
    const LabeledGraph g = petersen_graph();
    const auto spec = make_spec(g, false, mpq_class(1, 3), mpq_class(-2, 7));
    const SpectralNumeric numeric(g, spec);
    CHECK(numeric.n() == 10);
    // Eigenvalues ascending.
    for (size_t i = 1; i < numeric.eigenvalues().size(); ++i)
        CHECK(numeric.eigenvalues()[i - 1] <= numeric.eigenvalues()[i]);
    // Fidelity is 1 at t = 0 only for u = v; bounded by 1 always.
    for (double t : {0.1, 0.7, 2.9, 14.2}) {
        const double f = numeric.fidelity(t);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0 + 1e-12);
    }
}

TEST_CASE("trace output is a deterministic fixed-precision CSV") {
    const LabeledGraph g = petersen_graph();
    const auto spec = make_spec(g, true, 1, 0);
    const std::string a = fidelity_trace_csv(g, spec, 0.05, 0.01);
    const std::string b = fidelity_trace_csv(g, spec, 0.05, 0.01);
    CHECK(a == b);
    std::istringstream lines(a);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "time,fidelity");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        // Fixed 12-digit fields parse back as doubles.
        CHECK_NOTHROW(std::stod(line.substr(0, comma)));
        CHECK_NOTHROW(std::stod(line.substr(comma + 1)));
    }
    CHECK(rows == 6);  // t = 0.00 .. 0.05
    CHECK_THROWS_AS(fidelity_trace_csv(g, spec, 1.0, 0.0), ExactError);
}

}  // TEST_SUITE
