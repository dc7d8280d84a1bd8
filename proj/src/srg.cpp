#include "srgpst/srg.hpp"

#include <array>

namespace srgpst {

SrgParams srg_from_params(long n, long k, long a, long c) {
    auto reject = [&](const std::string& why) {
        throw ExactError("infeasible-parameters: (" + std::to_string(n) + ", " + std::to_string(k) +
                         ", " + std::to_string(a) + ", " + std::to_string(c) + "): " + why);
    };
    if (n < 2 || k < 1 || k > n - 1) reject("need 0 < k < n");
    if (a < 0 || c < 0) reject("negative intersection numbers");
    if (a > k - 1) reject("a exceeds k-1");
    if (c > k) reject("c exceeds k");
    // Two-way counting of edges between a vertex's neighbourhood and
    // non-neighbourhood.
    if (mpz_class(n - k - 1) * c != mpz_class(k) * (k - a - 1))
        reject("counting identity (n-k-1)c = k(k-a-1) fails");
    if (c == 0) reject("c = 0 is a disjoint union of cliques (imprimitive)");

    SrgParams p;
    p.n = n;
    p.k = k;
    p.a = a;
    p.c = c;
    // theta, tau are the roots of t^2 - (a-c)t - (k-c).
    const auto roots = solve_quadratic(1, mpq_class(c - a), mpq_class(c - k));
    p.theta = roots.larger;
    p.tau = roots.smaller;

    if (is_perfect_square(roots.discriminant)) {
        const mpq_class th = p.theta.as_rational(), ta = p.tau.as_rational();
        if (th.get_den() != 1 || ta.get_den() != 1)
            reject("rational eigenvalues must be integers");  // cannot happen for monic
        // m_theta + m_tau = n-1 and theta*m_theta + tau*m_tau = -k.
        const mpq_class mth = (-(ta * (n - 1)) - k) / (th - ta);
        if (mth.get_den() != 1) reject("non-integral multiplicity for theta");
        p.m_theta = mth.get_num();
        p.m_tau = mpz_class(n - 1) - p.m_theta;
        if (p.m_theta < 1 || p.m_tau < 1) reject("non-positive eigenvalue multiplicity");
    } else {
        // Conference case: equal multiplicities (n-1)/2 forced.
        if ((n - 1) % 2 != 0) reject("irrational eigenvalues need odd n-1 split evenly");
        p.m_theta = p.m_tau = mpz_class((n - 1) / 2);
        // theta*m_theta + tau*m_tau + k = 0 becomes (a-c)(n-1)/2 + k = 0.
        if (mpz_class(a - c) * ((n - 1) / 2) + k != 0)
            reject("trace identity fails for conference parameters");
    }
    if (!srg_identities_hold(p)) reject("derived spectrum violates the trace identities");
    return p;
}

bool srg_identities_hold(const SrgParams& p) {
    const QuadExt th = p.theta, ta = p.tau;
    const mpq_class mth(p.m_theta), mta(p.m_tau);
    const mpq_class n(p.n), k(p.k);
    const QuadExt zero{mpq_class(0)};
    // (1) multiplicities partition the spectrum
    if (mth + mta + 1 != n) return false;
    // (2) trace of A
    if (th * mth + ta * mta + k != zero) return false;
    // (3) trace of A^2
    if (th * th * mth + ta * ta * mta + mpq_class(k * k) != QuadExt(mpq_class(n * k)))
        return false;
    // (4) cross sum
    if (th * mta + ta * mth != (th + ta) * mpq_class(n - 1) + k) return false;
    // (5) product sum
    if (th * ta * mpq_class(mth + mta) != QuadExt(mpq_class(k * k - n * k)) - (th + ta) * k)
        return false;
    // (6) determinant-style identity
    if ((th * ta + k) * n != QuadExt(k * k) - (th + ta) * k + th * ta) return false;
    return true;
}

SrgVerification verify_srg(const LabeledGraph& g) {
    SrgVerification out;
    const int n = g.n();
    if (n < 4) {
        out.reason = "not-srg: too few vertices (" + std::to_string(n) + ")";
        return out;
    }
    const int k = g.regular_degree();
    if (k < 0) {
        out.reason = "not-srg: graph is not regular";
        return out;
    }
    if (!g.is_connected()) {
        out.reason = "not-srg: graph is disconnected (imprimitive)";
        return out;
    }
    if (g.is_complete()) {
        out.reason = "not-srg: complete graph (imprimitive)";
        return out;
    }

    // Common-neighbour counts, measured on the first pair of each type.
    auto common = [&](int u, int v) {
        int cnt = 0;
        for (int w = 0; w < n; ++w)
            if (g.adjacent(u, w) && g.adjacent(v, w)) ++cnt;
        return cnt;
    };
    int a = -1, c = -1;
    for (int u = 0; u < n && (a < 0 || c < 0); ++u)
        for (int v = u + 1; v < n && (a < 0 || c < 0); ++v) {
            if (g.adjacent(u, v) && a < 0) a = common(u, v);
            if (!g.adjacent(u, v) && c < 0) c = common(u, v);
        }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int expect = g.adjacent(u, v) ? a : c;
            if (common(u, v) != expect) {
                out.reason = "not-srg: common-neighbour count varies across " +
                             std::string(g.adjacent(u, v) ? "adjacent" : "non-adjacent") + " pairs";
                out.witness = {u, v};
                return out;
            }
        }
    if (c == k) {
        out.reason = "not-srg: c = k (complete multipartite, imprimitive)";
        return out;
    }
    try {
        out.params = srg_from_params(n, k, a, c);
    } catch (const ExactError& e) {
        out.reason = std::string("not-srg: ") + e.what();
        return out;
    }
    out.is_srg = true;
    return out;
}

std::array<IdempotentRow, 3> srg_idempotent_rows(const SrgParams& p, bool adjacent) {
    if (!p.rational_eigenvalues())
        throw ExactError("irrational-eigenvalues: conference parameters (" + std::to_string(p.n) +
                         ", " + std::to_string(p.k) + ", ...) have no rational idempotent entries");
    const mpq_class n(p.n), k(p.k);
    const mpq_class th = p.theta_q(), ta = p.tau_q();
    const mpq_class mth(p.m_theta), mta(p.m_tau);
    // E_lambda = (m/n)(I + (lambda/k)A - ((lambda+1)/(n-k-1)) (J-I-A)).
    auto row = [&](const mpq_class& lam, const mpq_class& mult) {
        IdempotentRow r;
        r.eigenvalue = lam;
        r.uu = mpq_class(mult / n);
        r.uv = adjacent ? mpq_class(mult / n * lam / k)
                        : mpq_class(-(mult / n) * (lam + 1) / (n - k - 1));
        return r;
    };
    IdempotentRow principal;
    principal.eigenvalue = k;
    principal.uu = mpq_class(1) / n;
    principal.uv = mpq_class(1) / n;
    return {principal, row(th, mth), row(ta, mta)};
}

nlohmann::ordered_json SrgParams::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["a"] = a;
    j["c"] = c;
    j["theta"] = theta.to_json();
    j["tau"] = tau.to_json();
    j["m_theta"] = m_theta.get_str();
    j["m_tau"] = m_tau.get_str();
    return j;
}

}  // namespace srgpst
