#pragma once
// End-to-end certification: exact spectrum, strong cospectrality, perfect or
// pretty good state transfer, and (when an explicit graph is at hand) the
// numeric walk-simulation counter-check.

#include <json.hpp>
#include <optional>
#include <string>

#include "srgpst/parity.hpp"
#include "srgpst/perturbation.hpp"
#include "srgpst/pgst.hpp"
#include "srgpst/srg.hpp"

namespace srgpst {

struct CertifyOptions {
    double scan_horizon = 100.0;  // numeric scan range for non-pst verdicts
    double scan_step = 0.01;
};

struct TransferCertificate {
    SrgParams params;
    PerturbSpec spec;
    PerturbedSpectrum spectrum;
    std::string verdict;  // "pst" | "pgst" | "strongly-cospectral-only" | "none"
    std::string obstruction;
    std::optional<ParityWitness> witness;
    std::optional<mpq_class> time_pi_multiple;
    std::optional<PgstEvidence> pgst_evidence;
    // Numeric verification (present when an explicit graph was available).
    std::optional<double> fidelity;
    std::optional<double> checked_at_time;

    bool positive() const { return verdict == "pst" || verdict == "pgst"; }
    nlohmann::ordered_json to_json() const;
    std::string to_report() const;  // human-readable, includes the parity table
};

// Full pipeline. Throws on structural errors (trivial perturbation,
// irrational eigenvalues, degenerate multiplicities).
TransferCertificate certify(const SrgParams& p, const PerturbSpec& s,
                            const std::optional<LabeledGraph>& graph = std::nullopt,
                            const CertifyOptions& options = {});

// Constructs a known graph realizing the parameter set when one of the
// built-in families matches: orthogonal-array block graphs, the folded
// 5-cube and its complement, the Petersen graph, Paley graphs.
std::optional<LabeledGraph> realize_srg(long n, long k, long a, long c);

}  // namespace srgpst
