#pragma once
// Continuous-time quantum walk numerics on the perturbed matrix
// M = A + beta(E_uv + E_vu) + gamma(E_uu + E_vv): eigendecomposition with
// residual validation, transfer fidelity |exp(itM)_{vu}|, parity of numeric
// eigenprojections against the exact spectrum, and CSV traces.

#include <string>
#include <vector>

#include "srgpst/graph.hpp"
#include "srgpst/perturbation.hpp"

namespace srgpst {

// Validated numeric spectral decomposition. Construction throws
// ExactError("ill-conditioned-eigenspace: ...") when the reconstruction
// residual or orthonormality defect exceeds 1e-10.
class SpectralNumeric {
public:
    SpectralNumeric(const LabeledGraph& g, const PerturbSpec& s);

    int n() const { return static_cast<int>(eigenvalues_.size()); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }  // ascending
    // |exp(itM)_{vu}| for the perturbed pair.
    double fidelity(double time) const;
    // Largest |exp(itM)_{wu}| over w != u at the given time (diagnostics).
    double max_offdiagonal(double time) const;

    // Projection of e_u and e_v onto the eigenspace cluster around value
    // lambda (tolerance for grouping numeric eigenvalues).
    struct ProjectionPair {
        std::vector<double> pu, pv;
    };
    ProjectionPair project(double lambda, double cluster_tol) const;

private:
    int u_, v_;
    std::vector<double> eigenvalues_;
    std::vector<std::vector<double>> vectors_;  // vectors_[r] is eigenvector r
};

// One-call fidelity.
double fidelity(const LabeledGraph& g, const PerturbSpec& s, double time);

// Classifies each distinct exact eigenvalue by the numeric parity of its
// eigenprojection (balanced: P e_u = P e_v; skew: P e_u = -P e_v; null:
// P e_u = 0) and compares with the exact class list. Distinct exact values
// landing closer than the clustering tolerance raise
// ExactError("ill-conditioned-eigenspace: ...").
struct ProjectionParityRow {
    double eigenvalue;
    std::string expected;  // "+", "-", "0" or combinations like "+0"
    std::string observed;
    bool matches;
};
struct ProjectionParityReport {
    bool all_match = true;
    std::vector<ProjectionParityRow> rows;
};
ProjectionParityReport projection_parity_check(const LabeledGraph& g,
                                               const PerturbedSpectrum& spectrum,
                                               double tolerance = 1e-8);

// time,fidelity rows at fixed step over [0, horizon]; 12-digit fixed-point
// output, deterministic.
std::string fidelity_trace_csv(const LabeledGraph& g, const PerturbSpec& s, double horizon,
                               double step);

}  // namespace srgpst
