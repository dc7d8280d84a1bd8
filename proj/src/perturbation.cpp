#include "srgpst/perturbation.hpp"

#include <algorithm>

namespace srgpst {

PerturbSpec make_spec(const LabeledGraph& g, bool adjacent, const mpq_class& beta,
                      const mpq_class& gamma) {
    const auto [u, v] = g.first_pair(adjacent);
    return PerturbSpec{u, v, beta, gamma, adjacent};
}

PerturbSpec make_spec_at(const LabeledGraph& g, int u, int v, const mpq_class& beta,
                         const mpq_class& gamma) {
    if (u == v) throw ExactError("perturbation needs two distinct vertices");
    if (u > v) std::swap(u, v);
    return PerturbSpec{u, v, beta, gamma, g.adjacent(u, v)};
}

// ---- perturbed characteristic polynomials ---------------------------------

RatPoly perturbed_charpoly(const LabeledGraph& g, const PerturbSpec& s) {
    const PhiFamily f = phi_polys(g, s.u, s.v);
    return f.phi - f.phi_uv * (2 * s.beta) - (f.phi_u + f.phi_v) * s.gamma +
           f.phi_pair * (s.gamma * s.gamma - s.beta * s.beta);
}

RatPoly perturbed_charpoly_oracle(const LabeledGraph& g, const PerturbSpec& s) {
    const int n = g.n();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) m[i][j] = 1;
    m[s.u][s.v] += s.beta;
    m[s.v][s.u] += s.beta;
    m[s.u][s.u] += s.gamma;
    m[s.v][s.v] += s.gamma;
    return charpoly_rational(m);
}

// ---- ExactValue -----------------------------------------------------------

ExactValue ExactValue::rational(mpq_class r) {
    ExactValue v;
    v.kind_ = Kind::Surd;
    v.value_ = QuadExt(std::move(r));
    return v;
}

ExactValue ExactValue::surd(QuadExt q) {
    ExactValue v;
    v.kind_ = Kind::Surd;
    v.value_ = std::move(q);
    return v;
}

ExactValue ExactValue::cubic_root(RatPoly cubic, mpq_class lo, mpq_class hi) {
    ExactValue v;
    v.kind_ = Kind::Cubic;
    v.poly_ = std::move(cubic);
    v.lo_ = std::move(lo);
    v.hi_ = std::move(hi);
    return v;
}

bool ExactValue::is_rational() const { return kind_ == Kind::Surd && value_.is_rational(); }
bool ExactValue::is_surd() const { return kind_ == Kind::Surd && !value_.is_rational(); }

mpq_class ExactValue::as_rational() const {
    if (kind_ != Kind::Surd) throw ExactError("eigenvalue is not rational: " + to_string());
    return value_.as_rational();
}

QuadExt ExactValue::as_surd() const {
    if (kind_ != Kind::Surd) throw ExactError("eigenvalue is not in a quadratic field: " + to_string());
    return value_;
}

std::pair<mpq_class, mpq_class> ExactValue::enclosure() const {
    if (kind_ != Kind::Cubic) throw ExactError("enclosure only attached to cubic roots");
    return {lo_, hi_};
}

double ExactValue::to_double() const {
    if (kind_ == Kind::Surd) return value_.to_double();
    return (lo_.get_d() + hi_.get_d()) / 2;
}

bool ExactValue::same_value(const ExactValue& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Surd) return value_ == o.value_;
    return poly_ == o.poly_ && lo_ == o.lo_ && hi_ == o.hi_;
}

std::string ExactValue::to_string() const {
    if (kind_ == Kind::Surd) return value_.to_string();
    return "root of " + poly_.to_string() + " in [" + rational_str(lo_) + ", " + rational_str(hi_) +
           "]";
}

nlohmann::ordered_json ExactValue::to_json() const {
    if (kind_ == Kind::Surd) return value_.to_json();
    nlohmann::ordered_json j;
    j["cubic"] = poly_.to_json();
    j["enclosure"] = {rational_str(lo_), rational_str(hi_)};
    return j;
}

const char* parity_symbol(Parity p) {
    switch (p) {
        case Parity::Balanced: return "+";
        case Parity::Skew: return "-";
        case Parity::Null: return "0";
    }
    return "?";
}

nlohmann::ordered_json EigenClass::to_json() const {
    nlohmann::ordered_json j;
    j["eigenvalue"] = value.to_json();
    j["multiplicity"] = multiplicity.get_str();
    j["parity"] = parity_symbol(parity);
    return j;
}

// ---- factor basis and perturbed spectrum ----------------------------------

SrgFactorBasis srg_factor_basis(const SrgParams& p, bool adjacent) {
    // All coefficients are symmetric in theta, tau, hence rational even for
    // conference parameters.
    const mpq_class k(p.k);
    const mpq_class st = mpq_class(p.a - p.c);   // theta + tau
    const mpq_class pt = mpq_class(p.c - p.k);   // theta * tau
    SrgFactorBasis b;
    b.p2 = RatPoly({pt, -st, 1});
    b.p1 = RatPoly({-k, mpq_class(1)}) * b.p2;
    if (adjacent) {
        b.q1 = RatPoly({k * st + k + 2 * pt, -(k + st - 1), 1});
        b.q2 = RatPoly({-(st + 1), 1});
    } else {
        b.q1 = RatPoly({k * st + 2 * k + 2 * pt, -(k + st), 1});
        b.q2 = RatPoly({-st, 1});
    }
    return b;
}

namespace {

void append_quadratic_classes(std::vector<EigenClass>& out, const RatPoly& quad, Parity parity) {
    const auto roots = solve_quadratic(quad.coeff(2), quad.coeff(1), quad.coeff(0));
    if (roots.discriminant == 0) {
        out.push_back({ExactValue::surd(roots.larger), 2, parity});
        return;
    }
    out.push_back({ExactValue::surd(roots.larger), 1, parity});
    out.push_back({ExactValue::surd(roots.smaller), 1, parity});
}

int parity_rank(Parity p) {
    switch (p) {
        case Parity::Balanced: return 0;
        case Parity::Skew: return 1;
        case Parity::Null: return 2;
    }
    return 3;
}

}  // namespace

PerturbedSpectrum srg_perturbed_polys(const SrgParams& p, const PerturbSpec& s) {
    if (s.trivial())
        throw ExactError(
            "trivial-perturbation: beta = gamma = 0 leaves the unperturbed spectrum; the "
            "balanced/skew split is undefined");
    if (!p.rational_eigenvalues())
        throw ExactError("irrational-eigenvalues: perturbed factor analysis needs integer theta, tau");
    if (!p.primitive())
        throw ExactError("infeasible-parameters: perturbation analysis needs a primitive SRG (0 < c < k)");
    if (p.m_theta < 2 || p.m_tau < 2)
        throw ExactError("degenerate-multiplicity: need m_theta, m_tau >= 2, got " +
                         p.m_theta.get_str() + ", " + p.m_tau.get_str());

    PerturbedSpectrum out;
    out.params = p;
    out.spec = s;
    const SrgFactorBasis b = srg_factor_basis(p, s.adjacent);
    out.p_plus = b.p1 - b.q1 * (s.beta + s.gamma);
    out.p_minus = b.p2 + b.q2 * (s.beta - s.gamma);

    // Null classes: theta and tau keep multiplicity m - 2 each (two
    // dimensions per eigenspace move into the balanced/skew factors).
    if (p.m_theta > 2)
        out.classes.push_back({ExactValue::rational(p.theta_q()), p.m_theta - 2, Parity::Null});
    if (p.m_tau > 2)
        out.classes.push_back({ExactValue::rational(p.tau_q()), p.m_tau - 2, Parity::Null});

    append_quadratic_classes(out.classes, out.p_minus, Parity::Skew);

    const auto rational_roots = out.p_plus.rational_roots();
    if (rational_roots.size() == 3) {
        // Group repeated roots into one class.
        for (size_t i = 0; i < rational_roots.size();) {
            size_t j = i;
            while (j < rational_roots.size() && rational_roots[j] == rational_roots[i]) ++j;
            out.classes.push_back({ExactValue::rational(rational_roots[i]),
                                   mpz_class(static_cast<long>(j - i)), Parity::Balanced});
            i = j;
        }
    } else if (rational_roots.size() == 1) {
        out.classes.push_back({ExactValue::rational(rational_roots[0]), 1, Parity::Balanced});
        const RatPoly quad = out.p_plus.divmod(RatPoly::from_roots({rational_roots[0]})).quot;
        append_quadratic_classes(out.classes, quad, Parity::Balanced);
    } else {
        // Irreducible cubic: three real roots with exact isolating intervals.
        const auto intervals = isolate_real_roots(out.p_plus, 20);
        if (intervals.size() != 3)
            throw ExactError("internal: cubic balanced factor must have three real roots");
        for (const auto& [lo, hi] : intervals)
            out.classes.push_back({ExactValue::cubic_root(out.p_plus, lo, hi), 1, Parity::Balanced});
    }

    std::sort(out.classes.begin(), out.classes.end(), [](const EigenClass& x, const EigenClass& y) {
        const double dx = x.value.to_double(), dy = y.value.to_double();
        if (dx != dy) return dx > dy;
        return parity_rank(x.parity) < parity_rank(y.parity);
    });
    return out;
}

mpq_class PerturbedSpectrum::trace() const {
    // Exact even when balanced roots are irrational: read root sums off the
    // monic factor coefficients instead of the class values.
    const mpq_class th = params.theta_q(), ta = params.tau_q();
    mpq_class total = th * mpq_class(params.m_theta - 2) + ta * mpq_class(params.m_tau - 2);
    total += -p_minus.coeff(1) / p_minus.leading();
    total += -p_plus.coeff(2) / p_plus.leading();
    return total;
}

nlohmann::ordered_json PerturbedSpectrum::to_json() const {
    nlohmann::ordered_json j;
    j["params"] = params.to_json();
    j["u"] = spec.u;
    j["v"] = spec.v;
    j["adjacent"] = spec.adjacent;
    j["beta"] = rational_str(spec.beta);
    j["gamma"] = rational_str(spec.gamma);
    j["p_plus"] = p_plus.to_json();
    j["p_minus"] = p_minus.to_json();
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : classes) j["classes"].push_back(cls.to_json());
    j["trace"] = rational_str(trace());
    return j;
}

// ---- real root isolation (Sturm) ------------------------------------------

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        RatPoly rem = chain[chain.size() - 2].divmod(chain.back()).rem;
        chain.push_back(-rem);
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const mpq_class& x) {
    int variations = 0, last = 0;
    for (const auto& f : chain) {
        const int s = sgn(f.evaluate(x));
        if (s != 0) {
            if (last != 0 && s != last) ++variations;
            last = s;
        }
    }
    return variations;
}

}  // namespace

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const RatPoly& p, int digits) {
    if (p.degree() < 1) return {};
    if (RatPoly::gcd(p, p.derivative()).degree() > 0)
        throw ExactError("root isolation requires a squarefree polynomial");
    const auto chain = sturm_chain(p);

    // Cauchy bound: all roots lie strictly inside (-bound, bound).
    mpq_class maxratio(0);
    for (int i = 0; i < p.degree(); ++i)
        maxratio = std::max(maxratio, mpq_class(abs(p.coeff(i) / p.leading())));
    const mpq_class bound = maxratio + 1;

    mpq_class width(1);
    for (int i = 0; i < digits; ++i) width /= 10;

    std::vector<std::pair<mpq_class, mpq_class>> isolated;
    // Split (lo, hi] until each piece holds at most one root.
    std::vector<std::pair<mpq_class, mpq_class>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
        if (count == 0) continue;
        if (count == 1) {
            isolated.emplace_back(lo, hi);
            continue;
        }
        const mpq_class mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    // Refine each isolating interval by plain bisection on p's sign change.
    for (auto& [lo, hi] : isolated) {
        if (p.evaluate(hi) == 0) {  // right endpoint is the root itself
            lo = hi;
            continue;
        }
        // The root is interior: p changes sign over (lo, hi).
        while (hi - lo > width) {
            const mpq_class mid = (lo + hi) / 2;
            const int sm = sgn(p.evaluate(mid));
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            if (sm == sgn(p.evaluate(lo)))
                lo = mid;
            else
                hi = mid;
        }
    }
    return isolated;
}

// ---- weighted rational equations cross-check ------------------------------

RationalEquationsReport srg_rational_equations_check(const SrgParams& p, const PerturbSpec& s) {
    if (!p.rational_eigenvalues())
        throw ExactError("irrational-eigenvalues: rational-equation check needs integer theta, tau");
    RationalEquationsReport rep;
    const SrgFactorBasis b = srg_factor_basis(p, s.adjacent);
    const mpq_class th = p.theta_q(), ta = p.tau_q();
    const mpq_class k(p.k), n(p.n);
    const mpq_class mth(p.m_theta), mta(p.m_tau);
    const RatPoly tk = RatPoly::from_roots({k});
    const RatPoly tth = RatPoly::from_roots({th});
    const RatPoly tta = RatPoly::from_roots({ta});
    const mpq_class pairs = s.adjacent ? mpq_class(n * k) : mpq_class(n * (n - k - 1));

    // Left-hand-side numerators over p1 (cubic equation) and p2 (quadratic).
    RatPoly cubic_num, quad_num;
    if (s.adjacent) {
        cubic_num = tth * tta * (2 * k) + tk * tta * ((k + th) * mth) + tk * tth * ((k + ta) * mta);
        quad_num = tta * ((k - th) * mth) + tth * ((k - ta) * mta);
    } else {
        const mpq_class fringe = n - k - 1;  // non-neighbours of a vertex
        cubic_num = tth * tta * (2 * fringe) + tk * tta * ((fringe - 1 - th) * mth) +
                    tk * tth * ((fringe - 1 - ta) * mta);
        quad_num = tta * ((n - k + th) * mth) + tth * ((n - k + ta) * mta);
    }

    const mpq_class bp = s.beta + s.gamma, bm = s.beta - s.gamma;
    const RatPoly p_plus = b.p1 - b.q1 * bp;
    const RatPoly p_minus = b.p2 + b.q2 * bm;

    if (bp != 0) {
        rep.checked_cubic = true;
        // numerator of [LHS - pairs/(beta+gamma)] cleared over p1
        const RatPoly cleared = cubic_num * bp - b.p1 * pairs;
        rep.cubic_matches = (cleared == -(p_plus * pairs));
    }
    if (bm != 0) {
        rep.checked_quadratic = true;
        const RatPoly cleared = quad_num * bm + b.p2 * pairs;
        rep.quadratic_matches = (cleared == p_minus * pairs);
    }
    rep.skipped_degenerate = !(rep.checked_cubic && rep.checked_quadratic);
    return rep;
}

// ---- strong cospectrality -------------------------------------------------

namespace {

// Witness eigenvalue from a nonconstant gcd, when its degree permits.
std::optional<ExactValue> witness_from(const RatPoly& g) {
    if (g.degree() == 1) return ExactValue::rational(-g.coeff(0) / g.coeff(1));
    if (g.degree() == 2) {
        const auto roots = solve_quadratic(g.coeff(2), g.coeff(1), g.coeff(0));
        return ExactValue::surd(roots.larger);
    }
    const auto rationals = g.rational_roots();
    if (!rationals.empty()) return ExactValue::rational(rationals.front());
    return std::nullopt;
}

CospectralityResult decide_cases(const RatPoly& balanced, const RatPoly& skew, const RatPoly& phi,
                                 const mpq_class& beta, const mpq_class& gamma) {
    if (beta == 0 && gamma == 0)
        throw ExactError("trivial-perturbation: beta = gamma = 0 perturbs nothing");
    CospectralityResult res;
    RatPoly shared;
    std::string label;
    if (beta != gamma && beta != -gamma) {
        shared = RatPoly::gcd(balanced, skew);
        label = "balanced and skew factors share";
    } else if (beta == gamma) {
        shared = RatPoly::gcd(balanced, phi);
        label = "balanced factor and unperturbed polynomial share";
    } else {
        shared = RatPoly::gcd(skew, phi);
        label = "skew factor and unperturbed polynomial share";
    }
    if (shared.degree() <= 0) {
        res.strongly_cospectral = true;
        return res;
    }
    res.strongly_cospectral = false;
    res.common_root = witness_from(shared);
    res.obstruction = label + " the factor " + shared.to_string();
    return res;
}

}  // namespace

CospectralityResult strong_cospectrality(const SrgParams& p, const PerturbSpec& s) {
    const PerturbedSpectrum spec = srg_perturbed_polys(p, s);
    // Shared roots with phi can only involve the radical (t-k)(t-theta)(t-tau).
    const RatPoly radical =
        RatPoly::from_roots({mpq_class(p.k), p.theta_q(), p.tau_q()});
    return decide_cases(spec.p_plus, spec.p_minus, radical, s.beta, s.gamma);
}

CospectralityResult strong_cospectrality(const LabeledGraph& g, const PerturbSpec& s) {
    const PhiFamily f = phi_polys(g, s.u, s.v);
    if (f.phi_u != f.phi_v)
        throw ExactError("not-cospectral: vertices " + std::to_string(s.u) + " and " +
                         std::to_string(s.v) + " have different deleted polynomials");
    // Reduced numerators of 1 - (beta -+ gamma)(phi_uv -+ phi_u)/phi.
    auto factor_numerator = [&](const RatPoly& num_raw, const mpq_class& coeff) {
        const RatPoly g0 = RatPoly::gcd(num_raw, f.phi);
        const RatPoly num = num_raw.divmod(g0).quot;
        const RatPoly den = f.phi.divmod(g0).quot;
        return den - num * coeff;
    };
    const RatPoly skew = factor_numerator(f.phi_uv - f.phi_u, s.beta - s.gamma);
    const RatPoly balanced = factor_numerator(f.phi_uv + f.phi_u, s.beta + s.gamma);
    return decide_cases(balanced, skew, f.phi, s.beta, s.gamma);
}

// ---- edge perturbation invariance -----------------------------------------

EdgeInvarianceReport edge_perturbation_invariance(
    const LabeledGraph& g, const std::vector<std::pair<mpq_class, mpq_class>>& samples) {
    if (!is_one_walk_regular(g))
        throw ExactError("not-one-walk-regular: edge invariance only asserted for 1-walk-regular graphs");
    EdgeInvarianceReport rep;
    const auto edge_list = g.edges();
    if (edge_list.size() <= 1) return rep;
    // One phi family per edge serves every sample; the perturbed polynomial
    // is just a rational combination of the five members.
    std::vector<RatPoly> reference(samples.size());
    bool have_reference = false;
    for (const auto& [u, v] : edge_list) {
        const PhiFamily f = phi_polys(g, u, v);
        for (size_t i = 0; i < samples.size(); ++i) {
            const auto& [beta, gamma] = samples[i];
            const RatPoly poly = f.phi - f.phi_uv * (2 * beta) - (f.phi_u + f.phi_v) * gamma +
                                 f.phi_pair * (gamma * gamma - beta * beta);
            if (!have_reference) {
                reference[i] = poly;
            } else if (poly != reference[i]) {
                rep.invariant = false;
                rep.differing_edge = {u, v};
                return rep;
            }
        }
        have_reference = true;
    }
    return rep;
}

}  // namespace srgpst
