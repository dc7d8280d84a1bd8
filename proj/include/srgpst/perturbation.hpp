#pragma once
// The (beta, gamma) pair perturbation M = A + beta(E_uv + E_vu)
// + gamma(E_uu + E_vv) and its exact spectral analysis.
//
// For a graph whose pair (u, v) is cospectral, the perturbed characteristic
// polynomial splits over the unperturbed one into a balanced factor (carrying
// eigenvectors with equal u, v entries) and a skew factor (opposite entries):
//
//   phi_pert / phi = [1 - (beta-gamma)(phi_uv - phi_u)/phi]
//                  * [1 - (beta+gamma)(phi_uv + phi_u)/phi].
//
// For a primitive strongly regular graph with rational eigenvalues
// theta > tau and degree k these factors reduce to cubic/quadratic
// polynomials:
//
//   P_plus  = p1 - (beta+gamma) q1      (balanced, cubic)
//   P_minus = p2 + (beta-gamma) q2      (skew, quadratic)
//
// with p1 = (t-k)(t-theta)(t-tau), p2 = (t-theta)(t-tau) and the q's as in
// the implementation. Sign convention sanity check: the perturbed trace is
// 2*gamma (the diagonal gains two gamma entries), and the skew quadratic
// above is the unique choice agreeing with it; sources stating the skew
// factor with the opposite sign are describing the (-beta, -gamma)
// perturbation.

#include <gmpxx.h>
#include <json.hpp>
#include <optional>
#include <variant>
#include <vector>

#include "srgpst/charpoly.hpp"
#include "srgpst/graph.hpp"
#include "srgpst/polynomial.hpp"
#include "srgpst/quadratic_field.hpp"
#include "srgpst/srg.hpp"

namespace srgpst {

struct PerturbSpec {
    int u = 0, v = 1;
    mpq_class beta, gamma;
    bool adjacent = false;  // whether {u, v} is an edge

    bool trivial() const { return beta == 0 && gamma == 0; }
};

// Makes a spec for the lexicographically first pair of the requested type.
PerturbSpec make_spec(const LabeledGraph& g, bool adjacent, const mpq_class& beta,
                      const mpq_class& gamma);
PerturbSpec make_spec_at(const LabeledGraph& g, int u, int v, const mpq_class& beta,
                         const mpq_class& gamma);

// Exact perturbed characteristic polynomial of any graph via the cofactor
// expansion phi_pert = phi - 2 beta phi_uv - gamma (phi_u + phi_v)
//                      + (gamma^2 - beta^2) phi_pair.
RatPoly perturbed_charpoly(const LabeledGraph& g, const PerturbSpec& s);
// Independent oracle for the same polynomial: det(tI - M) on the explicit
// rational matrix.
RatPoly perturbed_charpoly_oracle(const LabeledGraph& g, const PerturbSpec& s);

// An exact algebraic eigenvalue: rational, quadratic surd, or a root of an
// irreducible cubic pinned down by a rational isolating interval.
class ExactValue {
public:
    static ExactValue rational(mpq_class r);
    static ExactValue surd(QuadExt q);
    static ExactValue cubic_root(RatPoly cubic, mpq_class lo, mpq_class hi);

    bool is_rational() const;
    bool is_surd() const;
    bool is_cubic() const { return kind_ == Kind::Cubic; }
    mpq_class as_rational() const;
    QuadExt as_surd() const;  // rational values embed
    const RatPoly& cubic() const { return poly_; }
    std::pair<mpq_class, mpq_class> enclosure() const;

    double to_double() const;
    bool same_value(const ExactValue& o) const;
    std::string to_string() const;
    nlohmann::ordered_json to_json() const;

private:
    enum class Kind { Surd, Cubic } kind_ = Kind::Surd;
    QuadExt value_;        // Surd kind (rationals embedded)
    RatPoly poly_;         // Cubic kind
    mpq_class lo_, hi_;    // isolating interval for the cubic root
};

enum class Parity { Balanced, Skew, Null };
const char* parity_symbol(Parity p);  // "+", "-", "0"

struct EigenClass {
    ExactValue value;
    mpz_class multiplicity;
    Parity parity;

    nlohmann::ordered_json to_json() const;
};

struct PerturbedSpectrum {
    SrgParams params;
    PerturbSpec spec;
    RatPoly p_plus;   // balanced factor, monic cubic
    RatPoly p_minus;  // skew factor, monic quadratic
    std::vector<EigenClass> classes;

    // Exact sum of all eigenvalues with multiplicity; equals 2*gamma.
    mpq_class trace() const;
    nlohmann::ordered_json to_json() const;
};

// Exact perturbed spectrum of a primitive SRG with rational eigenvalues and
// both multiplicities >= 2. Errors:
//   irrational-eigenvalues   conference parameter sets
//   degenerate-multiplicity  m_theta < 2 or m_tau < 2
PerturbedSpectrum srg_perturbed_polys(const SrgParams& p, const PerturbSpec& s);

// The helper polynomials: p1, p2 and the adjacency-dependent q1, q2.
struct SrgFactorBasis {
    RatPoly p1, p2, q1, q2;
};
SrgFactorBasis srg_factor_basis(const SrgParams& p, bool adjacent);

// Cross-checks the weighted eigenvalue-count rational equations (cleared of
// denominators) against the P_plus / P_minus factor polynomials. The cubic
// equation degenerates at beta+gamma = 0 and the quadratic one at
// beta-gamma = 0; those are reported as skipped.
struct RationalEquationsReport {
    bool checked_cubic = false, cubic_matches = false;
    bool checked_quadratic = false, quadratic_matches = false;
    bool skipped_degenerate = false;
    bool all_pass() const {
        return (!checked_cubic || cubic_matches) && (!checked_quadratic || quadratic_matches);
    }
};
RationalEquationsReport srg_rational_equations_check(const SrgParams& p, const PerturbSpec& s);

// Strong cospectrality of u and v in the perturbed graph: every eigenvector
// can be chosen with u, v entries equal or opposite, and no eigenvalue mixes
// the two types. Decided exactly from the factor polynomials:
//   beta != +-gamma: P_plus and P_minus must share no root;
//   beta == gamma:   P_plus must share no root with phi;
//   beta == -gamma:  P_minus must share no root with phi.
// Throws ExactError("trivial-perturbation") at beta = gamma = 0.
struct CospectralityResult {
    bool strongly_cospectral = false;
    std::string obstruction;                  // human-readable reason if not
    std::optional<ExactValue> common_root;    // witness eigenvalue if known
};
CospectralityResult strong_cospectrality(const SrgParams& p, const PerturbSpec& s);
// General-graph route (any cospectral pair, not only SRGs), via the reduced
// rational functions (phi_uv -+ phi_u)/phi. Errors "not-cospectral" when
// phi_u != phi_v.
CospectralityResult strong_cospectrality(const LabeledGraph& g, const PerturbSpec& s);

// For a 1-walk-regular graph, the perturbed characteristic polynomial is the
// same whichever edge is perturbed. Verifies that on every edge for each
// sampled (beta, gamma). Errors "not-one-walk-regular" otherwise.
struct EdgeInvarianceReport {
    bool invariant = true;
    std::optional<std::pair<int, int>> differing_edge;
};
EdgeInvarianceReport edge_perturbation_invariance(
    const LabeledGraph& g, const std::vector<std::pair<mpq_class, mpq_class>>& samples = {
                               {mpq_class(-1), mpq_class(0)},
                               {mpq_class(1, 2), mpq_class(1, 3)},
                               {mpq_class(2), mpq_class(-1)}});

// Isolates the real roots of a squarefree polynomial (Sturm bisection) and
// refines every isolating interval to width <= 10^-digits (exact rational
// endpoints). Used to attach enclosures to irreducible-cubic eigenvalues.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const RatPoly& p, int digits);

}  // namespace srgpst
