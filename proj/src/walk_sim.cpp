#include "srgpst/walk_sim.hpp"

#include <eigen3/Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <map>
#include <sstream>

namespace srgpst {

namespace {

Eigen::MatrixXd perturbed_matrix(const LabeledGraph& g, const PerturbSpec& s) {
    const int n = g.n();
    if (s.u < 0 || s.v < 0 || s.u >= n || s.v >= n || s.u == s.v)
        throw ExactError("perturbed pair out of range");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) m(i, j) = 1.0;
    const double beta = s.beta.get_d(), gamma = s.gamma.get_d();
    m(s.u, s.v) += beta;
    m(s.v, s.u) += beta;
    m(s.u, s.u) += gamma;
    m(s.v, s.v) += gamma;
    return m;
}

}  // namespace

SpectralNumeric::SpectralNumeric(const LabeledGraph& g, const PerturbSpec& s) : u_(s.u), v_(s.v) {
    const Eigen::MatrixXd m = perturbed_matrix(g, s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw ExactError("ill-conditioned-eigenspace: eigensolver failed to converge");
    const Eigen::MatrixXd& vec = solver.eigenvectors();
    const Eigen::VectorXd& val = solver.eigenvalues();

    const double residual = (m - vec * val.asDiagonal() * vec.transpose()).cwiseAbs().maxCoeff();
    const double ortho =
        (vec.transpose() * vec - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
    if (residual > 1e-10 || ortho > 1e-10)
        throw ExactError("ill-conditioned-eigenspace: residual " + std::to_string(residual) +
                         ", orthonormality defect " + std::to_string(ortho));

    const int n = static_cast<int>(val.size());
    eigenvalues_.resize(n);
    vectors_.assign(n, std::vector<double>(n));
    for (int r = 0; r < n; ++r) {
        eigenvalues_[r] = val(r);
        for (int i = 0; i < n; ++i) vectors_[r][i] = vec(i, r);
    }
}

double SpectralNumeric::fidelity(double time) const {
    std::complex<double> amplitude(0, 0);
    for (size_t r = 0; r < eigenvalues_.size(); ++r) {
        const double weight = vectors_[r][u_] * vectors_[r][v_];
        amplitude += std::polar(weight, time * eigenvalues_[r]);
    }
    return std::abs(amplitude);
}

double SpectralNumeric::max_offdiagonal(double time) const {
    double best = 0;
    for (size_t w = 0; w < eigenvalues_.size(); ++w) {
        if (static_cast<int>(w) == u_) continue;
        std::complex<double> amplitude(0, 0);
        for (size_t r = 0; r < eigenvalues_.size(); ++r)
            amplitude += std::polar(vectors_[r][u_] * vectors_[r][w], time * eigenvalues_[r]);
        best = std::max(best, std::abs(amplitude));
    }
    return best;
}

SpectralNumeric::ProjectionPair SpectralNumeric::project(double lambda, double cluster_tol) const {
    const int n = this->n();
    ProjectionPair out;
    out.pu.assign(n, 0.0);
    out.pv.assign(n, 0.0);
    for (int r = 0; r < n; ++r) {
        if (std::abs(eigenvalues_[r] - lambda) > cluster_tol) continue;
        const double cu = vectors_[r][u_], cv = vectors_[r][v_];
        for (int i = 0; i < n; ++i) {
            out.pu[i] += cu * vectors_[r][i];
            out.pv[i] += cv * vectors_[r][i];
        }
    }
    return out;
}

double fidelity(const LabeledGraph& g, const PerturbSpec& s, double time) {
    return SpectralNumeric(g, s).fidelity(time);
}

ProjectionParityReport projection_parity_check(const LabeledGraph& g,
                                               const PerturbedSpectrum& spectrum,
                                               double tolerance) {
    const SpectralNumeric numeric(g, spectrum.spec);

    // Distinct exact eigenvalues; classes sharing a value merge their parity
    // labels (a null class is invisible in the projections of e_u, e_v).
    std::map<double, std::string> expected;
    for (const auto& cls : spectrum.classes) {
        const double value = cls.value.to_double();
        auto [it, inserted] = expected.try_emplace(value, "");
        const char* sym = parity_symbol(cls.parity);
        if (it->second.find(sym) == std::string::npos) it->second += sym;
    }
    // Clustering sanity: distinct exact values must stay separated.
    const double cluster_tol = 1e-6;
    double previous = 0;
    bool first = true;
    for (const auto& [value, label] : expected) {
        if (!first && value - previous < 2 * cluster_tol)
            throw ExactError("ill-conditioned-eigenspace: exact eigenvalues " +
                             std::to_string(previous) + " and " + std::to_string(value) +
                             " too close to cluster numerically");
        previous = value;
        first = false;
    }

    ProjectionParityReport report;
    for (const auto& [value, label] : expected) {
        const auto proj = numeric.project(value, cluster_tol);
        double diff = 0, sum = 0, mass_u = 0;
        for (size_t i = 0; i < proj.pu.size(); ++i) {
            diff = std::max(diff, std::abs(proj.pu[i] - proj.pv[i]));
            sum = std::max(sum, std::abs(proj.pu[i] + proj.pv[i]));
            mass_u = std::max(mass_u, std::abs(proj.pu[i]));
        }
        std::string observed;
        if (mass_u <= tolerance && diff <= tolerance && sum <= tolerance)
            observed = "0";
        else if (diff <= tolerance)
            observed = "+";
        else if (sum <= tolerance)
            observed = "-";
        else
            observed = "mixed";

        // A merged class like "+0" projects like its non-null part.
        std::string want = label;
        if (want.size() > 1) {
            want.erase(std::remove(want.begin(), want.end(), '0'), want.end());
            if (want.empty()) want = "0";
        }
        const bool matches = (want == observed) || (want.size() > 1 && observed == "mixed");
        ProjectionParityRow row{value, label, observed, matches};
        report.rows.push_back(row);
        report.all_match = report.all_match && matches;
    }
    return report;
}

std::string fidelity_trace_csv(const LabeledGraph& g, const PerturbSpec& s, double horizon,
                               double step) {
    if (step <= 0 || horizon < 0) throw ExactError("trace needs positive step and horizon");
    const SpectralNumeric numeric(g, s);
    std::ostringstream out;
    out << "time,fidelity\n" << std::fixed << std::setprecision(12);
    const long long count = static_cast<long long>(horizon / step);
    for (long long i = 0; i <= count; ++i) {
        const double t = i * step;
        out << t << "," << numeric.fidelity(t) << "\n";
    }
    return out.str();
}

}  // namespace srgpst
