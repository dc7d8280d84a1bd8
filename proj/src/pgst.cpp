#include "srgpst/pgst.hpp"

#include <cmath>

namespace srgpst {

bool irreducible_over_rationals(const RatPoly& p) {
    const int d = p.degree();
    if (d != 2 && d != 3)
        throw ExactError("unsupported-degree: irreducibility test covers degrees 2 and 3, got " +
                         std::to_string(d));
    if (d == 2) {
        const mpq_class disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
        return !is_perfect_square(disc);
    }
    // A cubic is reducible over the rationals iff it has a rational root.
    return p.rational_roots().empty();
}

nlohmann::ordered_json PgstEvidence::to_json() const {
    nlohmann::ordered_json j;
    j["method"] = method;
    j["balanced_irreducible"] = balanced_irreducible;
    j["skew_irreducible"] = skew_irreducible;
    j["skew_mean"] = rational_str(skew_mean);
    j["balanced_mean"] = rational_str(balanced_mean);
    j["means_differ"] = means_differ;
    if (pst_witness) j["pst_witness"] = pst_witness->to_json();
    return j;
}

PgstDecision pgst_certify(const SrgParams& p, const PerturbSpec& s) {
    PgstDecision out;
    const PerturbedSpectrum spectrum = srg_perturbed_polys(p, s);
    const CospectralityResult sc = strong_cospectrality(p, s);
    if (!sc.strongly_cospectral) {
        out.failure = "not strongly cospectral: " + sc.obstruction;
        return out;
    }

    // Exact root averages from the monic factor coefficients.
    out.evidence.skew_mean = -spectrum.p_minus.coeff(1) / spectrum.p_minus.leading() / 2;
    out.evidence.balanced_mean = -spectrum.p_plus.coeff(2) / spectrum.p_plus.leading() / 3;
    out.evidence.means_differ = out.evidence.skew_mean != out.evidence.balanced_mean;
    out.evidence.skew_irreducible = irreducible_over_rationals(spectrum.p_minus);
    out.evidence.balanced_irreducible = irreducible_over_rationals(spectrum.p_plus);

    if (out.evidence.skew_irreducible && out.evidence.balanced_irreducible) {
        if (out.evidence.means_differ) {
            out.pgst = true;
            out.evidence.method = "irreducible-factors";
            return out;
        }
        out.failure = "factor root averages coincide";
        return out;
    }

    // Reducible factors: pretty good transfer still holds when perfect
    // transfer does.
    const ParityWitness witness = pst_parity_check(spectrum);
    if (witness.parity_ok) {
        out.pgst = true;
        out.evidence.method = "pst-implies-pgst";
        out.evidence.pst_witness = witness;
        return out;
    }
    out.failure = "a factor is reducible and the perfect-transfer parity test fails (" +
                  witness.failure + ")";
    return out;
}

FidelityScanResult fidelity_scan(const LabeledGraph& g, const PerturbSpec& s, double horizon,
                                 double step) {
    if (step <= 0 || horizon <= 0) throw ExactError("fidelity scan needs positive step and horizon");
    const SpectralNumeric numeric(g, s);
    FidelityScanResult best;
    const long long count = static_cast<long long>(horizon / step);
    for (long long i = 0; i <= count; ++i) {
        const double t = i * step;
        const double f = numeric.fidelity(t);
        if (f > best.best_fidelity + 1e-15) {  // strictly-better keeps leftmost ties
            best.best_fidelity = f;
            best.best_time = t;
        }
    }
    // Golden-section refinement around the best grid point.
    double lo = std::max(0.0, best.best_time - step), hi = best.best_time + step;
    const double ratio = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
    double f1 = numeric.fidelity(x1), f2 = numeric.fidelity(x2);
    for (int iter = 0; iter < 60; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = numeric.fidelity(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = numeric.fidelity(x1);
        }
    }
    const double mid = (lo + hi) / 2;
    const double fm = numeric.fidelity(mid);
    if (fm > best.best_fidelity) {
        best.best_fidelity = fm;
        best.best_time = mid;
    }
    return best;
}

}  // namespace srgpst
