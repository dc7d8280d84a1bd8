#include "srgpst/certify.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "srgpst/orthogonal_array.hpp"

namespace srgpst {

TransferCertificate certify(const SrgParams& p, const PerturbSpec& s,
                            const std::optional<LabeledGraph>& graph,
                            const CertifyOptions& options) {
    if (s.trivial()) throw ExactError("trivial-perturbation: beta = gamma = 0 perturbs nothing");
    TransferCertificate cert;
    cert.params = p;
    cert.spec = s;
    cert.spectrum = srg_perturbed_polys(p, s);

    const CospectralityResult sc = strong_cospectrality(p, s);
    if (!sc.strongly_cospectral) {
        cert.verdict = "none";
        cert.obstruction = sc.obstruction;
        if (graph) {
            const auto scan = fidelity_scan(*graph, s, options.scan_horizon, options.scan_step);
            cert.fidelity = scan.best_fidelity;
            cert.checked_at_time = scan.best_time;
        }
        return cert;
    }

    const ParityWitness witness = pst_parity_check(cert.spectrum);
    if (witness.parity_ok) {
        cert.verdict = "pst";
        cert.witness = witness;
        const QuadExt gap = witness.lambda1 - witness.lambda2;
        if (gap.is_rational()) {
            cert.time_pi_multiple = pst_time_pi_multiple(witness);
            if (graph) {
                const double t = M_PI * to_double(*cert.time_pi_multiple);
                cert.fidelity = fidelity(*graph, s, t);
                cert.checked_at_time = t;
            }
        } else if (graph) {
            const auto scan = fidelity_scan(*graph, s, options.scan_horizon, options.scan_step);
            cert.fidelity = scan.best_fidelity;
            cert.checked_at_time = scan.best_time;
        }
        return cert;
    }

    const PgstDecision decision = pgst_certify(p, s);
    cert.pgst_evidence = decision.evidence;
    if (decision.pgst) {
        cert.verdict = "pgst";
    } else {
        cert.verdict = "strongly-cospectral-only";
        cert.obstruction = decision.failure;
    }
    cert.witness = witness;  // records why perfect transfer failed
    if (graph) {
        const auto scan = fidelity_scan(*graph, s, options.scan_horizon, options.scan_step);
        cert.fidelity = scan.best_fidelity;
        cert.checked_at_time = scan.best_time;
    }
    return cert;
}

nlohmann::ordered_json TransferCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["verdict"] = verdict;
    j["beta"] = rational_str(spec.beta);
    j["gamma"] = rational_str(spec.gamma);
    j["time_pi_multiple"] =
        time_pi_multiple ? nlohmann::ordered_json(rational_str(*time_pi_multiple))
                         : nlohmann::ordered_json(nullptr);
    j["ratios"] = nlohmann::ordered_json::array();
    if (witness)
        for (const auto& entry : witness->ratios)
            j["ratios"].push_back(entry.ratio_rational ? rational_str(entry.ratio) : "irrational");
    j["r"] = (witness && witness->parity_ok) ? nlohmann::ordered_json(witness->r)
                                             : nlohmann::ordered_json(nullptr);
    j["fidelity"] = fidelity ? nlohmann::ordered_json(*fidelity) : nlohmann::ordered_json(nullptr);
    j["checked_at_time"] =
        checked_at_time ? nlohmann::ordered_json(*checked_at_time) : nlohmann::ordered_json(nullptr);
    j["u"] = spec.u;
    j["v"] = spec.v;
    j["adjacent"] = spec.adjacent;
    j["params"] = params.to_json();
    j["p_plus"] = spectrum.p_plus.to_json();
    j["p_minus"] = spectrum.p_minus.to_json();
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : spectrum.classes) j["classes"].push_back(cls.to_json());
    if (witness) j["witness"] = witness->to_json();
    if (pgst_evidence) j["pgst_evidence"] = pgst_evidence->to_json();
    if (!obstruction.empty()) j["obstruction"] = obstruction;
    return j;
}

std::string TransferCertificate::to_report() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(12);
    out << "SRG(" << params.n << ", " << params.k << ", " << params.a << ", " << params.c << ")"
        << "  theta = " << params.theta.to_string() << ", tau = " << params.tau.to_string()
        << ", m_theta = " << params.m_theta.get_str() << ", m_tau = " << params.m_tau.get_str()
        << "\n";
    out << "pair (" << spec.u << ", " << spec.v << ") "
        << (spec.adjacent ? "adjacent" : "non-adjacent") << ", beta = " << rational_str(spec.beta)
        << ", gamma = " << rational_str(spec.gamma) << "\n";
    out << "balanced factor  P+ = " << spectrum.p_plus.to_string() << "\n";
    out << "skew factor      P- = " << spectrum.p_minus.to_string() << "\n";
    out << "eigenvalue classes (value, multiplicity, parity):\n";
    for (const auto& cls : spectrum.classes)
        out << "  " << cls.value.to_string() << "   x" << cls.multiplicity.get_str() << "   "
            << parity_symbol(cls.parity) << "\n";
    if (witness && !witness->ratios.empty()) {
        out << "parity table (mu, ratio, numerator, |den|_2):\n";
        for (const auto& entry : witness->ratios) {
            out << "  mu = " << entry.mu.to_string() << "   ratio = "
                << (entry.ratio_rational ? rational_str(entry.ratio) : "irrational");
            if (entry.ratio_rational)
                out << "   " << (entry.numerator_odd ? "odd" : "even") << "/" << "2^"
                    << entry.denominator_val2;
            out << "\n";
        }
    }
    out << "verdict: " << verdict;
    if (verdict == "pst")
        out << " (perfect state transfer)";
    else if (verdict == "pgst")
        out << " (pretty good state transfer)";
    else if (verdict == "strongly-cospectral-only")
        out << " (strongly cospectral, but no transfer)";
    else if (verdict == "none")
        out << " (not strongly cospectral)";
    out << "\n";
    if (time_pi_multiple)
        out << "transfer time: pi * " << rational_str(*time_pi_multiple) << "\n";
    if (pgst_evidence && verdict == "pgst") {
        out << "pgst method: " << pgst_evidence->method << "\n";
        if (pgst_evidence->method == "irreducible-factors")
            out << "root averages: skew " << rational_str(pgst_evidence->skew_mean) << " vs balanced "
                << rational_str(pgst_evidence->balanced_mean) << "\n";
    }
    if (!obstruction.empty()) out << "obstruction: " << obstruction << "\n";
    if (fidelity)
        out << "numeric fidelity " << *fidelity << " at time " << *checked_at_time << "\n";
    return out.str();
}

std::optional<LabeledGraph> realize_srg(long n, long k, long a, long c) {
    auto verified = [&](LabeledGraph g) -> std::optional<LabeledGraph> {
        const auto check = verify_srg(g);
        if (check.is_srg && check.params->n == n && check.params->k == k && check.params->a == a &&
            check.params->c == c)
            return g;
        return std::nullopt;
    };
    if (n == 10 && k == 3 && a == 0 && c == 1) return verified(petersen_graph());
    if (n == 16 && k == 5 && a == 0 && c == 2) return verified(clebsch_graph());
    if (n == 16 && k == 10 && a == 6 && c == 6) return verified(clebsch_graph().complement());
    // Orthogonal-array block graphs: n = m^2, degree (m-1)r.
    const long m = static_cast<long>(std::lround(std::sqrt(static_cast<double>(n))));
    if (m >= 2 && m * m == n && k % (m - 1) == 0) {
        const long r = k / (m - 1);
        if (r >= 2 && a == m - 2 + (r - 1) * (r - 2) && c == r * (r - 1) &&
            (r <= 3 || (is_prime(m) && r <= m + 1))) {
            try {
                return verified(oa_graph(static_cast<int>(r), static_cast<int>(m)));
            } catch (const std::invalid_argument&) {
            }
        }
    }
    // Paley graphs on prime q = 1 mod 4.
    if (n >= 5 && n % 4 == 1 && is_prime(n) && k == (n - 1) / 2 && a == (n - 5) / 4 &&
        c == (n - 1) / 4) {
        return verified(paley_graph(static_cast<int>(n)));
    }
    return std::nullopt;
}

}  // namespace srgpst
