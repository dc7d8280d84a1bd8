#pragma once
// Strongly regular graph parameter arithmetic: feasibility, the eigenvalues
// theta > tau with their multiplicities, the standard trace identities, a
// certificate-producing matrix verifier, and spectral idempotent entries.

#include <gmpxx.h>
#include <json.hpp>
#include <optional>
#include <string>

#include "srgpst/graph.hpp"
#include "srgpst/quadratic_field.hpp"
#include "srgpst/rational.hpp"

namespace srgpst {

struct SrgParams {
    long n = 0, k = 0, a = 0, c = 0;  // vertices, degree, lambda, mu
    QuadExt theta, tau;               // non-principal eigenvalues, theta > tau
    // Multiplicities of theta and tau. Always integers; equal to (n-1)/2 each
    // in the conference (irrational-eigenvalue) case.
    mpz_class m_theta, m_tau;

    bool rational_eigenvalues() const { return theta.is_rational(); }
    // theta and tau as exact rationals; error in the conference case.
    mpq_class theta_q() const { return theta.as_rational(); }
    mpq_class tau_q() const { return tau.as_rational(); }
    // A primitive SRG is connected with connected complement: 0 < c < k.
    bool primitive() const { return c > 0 && c < k; }

    nlohmann::ordered_json to_json() const;
};

// Derives eigenvalues and multiplicities from (n, k, a, c), checking the
// counting identity (n-k-1)c = k(k-a-1) and multiplicity integrality.
// Throws ExactError("infeasible-parameters: ...") when no SRG can exist.
SrgParams srg_from_params(long n, long k, long a, long c);

// Verifies A^2 = kI + aA + c(J - I - A) entrywise on an explicit graph.
// Failure reports carry the reason and, for entrywise mismatches, a witness
// entry (i, j). Imprimitive strongly regular graphs (complete multipartite
// and disjoint unions, i.e. c = k or disconnected or complete) are rejected:
// the perturbation theory downstream needs m_theta, m_tau >= 2 eigenspaces
// with 0 < c < k.
struct SrgVerification {
    bool is_srg = false;
    std::string reason;                          // empty when is_srg
    std::optional<std::pair<int, int>> witness;  // offending entry if any
    std::optional<SrgParams> params;             // populated when is_srg
};
SrgVerification verify_srg(const LabeledGraph& g);

// The six exact trace identities tying (n, k, theta, tau, m_theta, m_tau)
// together; all hold for every output of srg_from_params.
bool srg_identities_hold(const SrgParams& p);

// One row of a spectral idempotent of an SRG: the common diagonal entry and
// the common off-diagonal entry for the requested adjacency.
struct IdempotentRow {
    mpq_class eigenvalue;
    mpq_class uu;  // (E_lambda)_{uu}
    mpq_class uv;  // (E_lambda)_{uv} for the requested pair type
};

// Rows of E_k, E_theta, E_tau (in that order) for an adjacent or non-adjacent
// pair. Requires rational eigenvalues; throws
// ExactError("irrational-eigenvalues: ...") for conference parameters.
std::array<IdempotentRow, 3> srg_idempotent_rows(const SrgParams& p, bool adjacent);

}  // namespace srgpst
