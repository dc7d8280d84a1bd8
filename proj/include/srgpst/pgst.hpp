#pragma once
// Pretty good state transfer: fidelity approaching 1 over unbounded time
// without ever reaching it. Certified exactly through irreducibility of both
// perturbation factors plus a root-average separation, with a numeric
// fidelity scan as the observational companion.

#include <gmpxx.h>
#include <json.hpp>
#include <optional>
#include <string>

#include "srgpst/parity.hpp"
#include "srgpst/perturbation.hpp"
#include "srgpst/walk_sim.hpp"

namespace srgpst {

// Rational irreducibility for degrees 2 and 3 (non-square discriminant,
// resp. no rational root). Throws ExactError("unsupported-degree: ...")
// outside that range.
bool irreducible_over_rationals(const RatPoly& p);

// Evidence carried by a pgst certification.
struct PgstEvidence {
    std::string method;  // "irreducible-factors" or "pst-implies-pgst"
    bool balanced_irreducible = false;
    bool skew_irreducible = false;
    mpq_class skew_mean, balanced_mean;  // exact root averages of the factors
    bool means_differ = false;
    std::optional<ParityWitness> pst_witness;  // for the pst-implies-pgst route

    nlohmann::ordered_json to_json() const;
};

struct PgstDecision {
    bool pgst = false;
    PgstEvidence evidence;
    std::string failure;  // first failed condition when !pgst
};

// Decides pretty good state transfer for a strongly cospectral perturbed
// spectrum: both factors irreducible and root averages distinct; or, when
// irreducibility fails, perfect state transfer (which subsumes pgst).
// Strong cospectrality is the caller's precondition and is re-checked.
PgstDecision pgst_certify(const SrgParams& p, const PerturbSpec& s);

// Best observed fidelity on the grid {0, step, 2*step, ...} up to horizon,
// refined by 60 golden-section iterations around the best grid point.
// Leftmost maximizer wins ties; deterministic for fixed inputs.
struct FidelityScanResult {
    double best_time = 0;
    double best_fidelity = 0;
};
FidelityScanResult fidelity_scan(const LabeledGraph& g, const PerturbSpec& s, double horizon,
                                 double step);

}  // namespace srgpst
