#include "srgpst/parity.hpp"

#include <algorithm>
#include <set>

namespace srgpst {

nlohmann::ordered_json RatioEntry::to_json() const {
    nlohmann::ordered_json j;
    j["mu"] = mu.to_json();
    if (ratio_rational) {
        j["ratio"] = rational_str(ratio);
        j["numerator_odd"] = numerator_odd;
        j["denominator_val2"] = denominator_val2;
    } else {
        j["ratio"] = "irrational";
    }
    return j;
}

nlohmann::ordered_json ParityWitness::to_json() const {
    nlohmann::ordered_json j;
    j["s"] = rational_str(mpq_class(p, q));
    j["p"] = p.get_str();
    j["q"] = q.get_str();
    j["discriminant_square"] = discriminant_square;
    if (discriminant_square) {
        j["alpha"] = alpha.get_str();
        j["A"] = a_term.get_str();
        j["B"] = b_term.get_str();
    }
    j["lambda1"] = lambda1.to_json();
    j["lambda2"] = lambda2.to_json();
    j["ratios"] = nlohmann::ordered_json::array();
    for (const auto& r : ratios) j["ratios"].push_back(r.to_json());
    j["parity_ok"] = parity_ok;
    if (parity_ok) j["r"] = r;
    if (!failure.empty()) j["failure"] = failure;
    return j;
}

ParityWitness pst_parity_check(const PerturbedSpectrum& spectrum) {
    ParityWitness w;
    const mpq_class s = spectrum.spec.gamma - spectrum.spec.beta;
    w.p = s.get_num();
    w.q = s.get_den();

    // Skew eigenvalues lambda_1 >= lambda_2 from the quadratic factor.
    std::vector<const EigenClass*> skew;
    std::vector<const EigenClass*> balanced;
    for (const auto& cls : spectrum.classes) {
        if (cls.parity == Parity::Skew) skew.push_back(&cls);
        if (cls.parity == Parity::Balanced) balanced.push_back(&cls);
    }
    if (skew.size() == 1) {
        w.lambda1 = w.lambda2 = skew[0]->value.as_surd();
        w.failure = "skew eigenvalues coincide (double root)";
        return w;
    }
    if (skew.size() != 2) {
        w.failure = "unexpected skew class count " + std::to_string(skew.size());
        return w;
    }
    QuadExt l1 = skew[0]->value.as_surd(), l2 = skew[1]->value.as_surd();
    if ((l1 - l2).sign() < 0) std::swap(l1, l2);
    w.lambda1 = l1;
    w.lambda2 = l2;

    // Integer witness data from the scaled discriminant: with sigma and prod
    // the shifted eigenvalue sum/product of the skew quadratic's base,
    // alpha^2 = (p - q*sigma)^2 - 4 q^2 prod.
    {
        const mpz_class th(spectrum.params.theta_q().get_num());
        const mpz_class ta(spectrum.params.tau_q().get_num());
        const bool adj = spectrum.spec.adjacent;
        const mpz_class sigma = adj ? mpz_class(th + ta + 2) : mpz_class(th + ta);
        const mpz_class prod = adj ? mpz_class((th + 1) * (ta + 1)) : mpz_class(th * ta);
        const mpz_class alpha2 = (w.p - w.q * sigma) * (w.p - w.q * sigma) - 4 * w.q * w.q * prod;
        if (alpha2 >= 0 && is_perfect_square(alpha2)) {
            w.discriminant_square = true;
            w.alpha = isqrt_exact(alpha2);
            w.a_term = w.p - w.q * sigma - w.alpha;
            w.b_term = w.p - w.q * sigma + w.alpha;
        }
    }

    const QuadExt gap = l1 - l2;
    if (gap.sign() == 0) {
        w.failure = "zero skew gap";
        return w;
    }

    for (const EigenClass* cls : balanced) {
        if (cls->value.is_cubic()) {
            w.failure = "balanced factor is an irreducible cubic (irrational ratios)";
            return w;
        }
        RatioEntry entry;
        entry.mu = cls->value.as_surd();
        QuadExt ratio = (l1 - entry.mu) / gap;
        if (!ratio.is_rational()) {
            entry.ratio_rational = false;
            w.ratios.push_back(entry);
            w.failure = "irrational ratio at mu = " + entry.mu.to_string();
            return w;
        }
        entry.ratio_rational = true;
        entry.ratio = ratio.as_rational();
        entry.numerator_odd = mpz_class(entry.ratio.get_num()) % 2 != 0;
        entry.denominator_val2 =
            entry.ratio == 0 ? 0 : two_adic_valuation(mpz_class(entry.ratio.get_den()));
        w.ratios.push_back(entry);
    }

    // Condition (ii): odd numerators over even denominators with one common
    // 2-adic valuation r >= 1.
    bool ok = true;
    std::string why;
    unsigned long common_r = 0;
    bool have_r = false;
    for (const auto& entry : w.ratios) {
        if (!entry.numerator_odd) {
            ok = false;
            why = "even numerator in ratio " + rational_str(entry.ratio);
            break;
        }
        if (entry.denominator_val2 < 1) {
            ok = false;
            why = "odd denominator in ratio " + rational_str(entry.ratio);
            break;
        }
        if (!have_r) {
            common_r = entry.denominator_val2;
            have_r = true;
        } else if (entry.denominator_val2 != common_r) {
            ok = false;
            why = "denominator 2-adic valuations differ";
            break;
        }
    }
    if (w.ratios.empty()) {
        ok = false;
        why = "no balanced eigenvalues to compare";
    }
    w.parity_ok = ok;
    if (ok)
        w.r = common_r;
    else
        w.failure = why;
    return w;
}

mpq_class pst_time_pi_multiple(const ParityWitness& w) {
    if (!w.parity_ok) throw ExactError("no transfer time: parity conditions fail");
    const QuadExt gap = w.lambda1 - w.lambda2;
    if (!gap.is_rational())
        throw ExactError("transfer time is not a rational multiple of pi (irrational gap)");
    mpz_class denominators(1);
    for (const auto& entry : w.ratios)
        denominators = lcm(denominators, mpz_class(entry.ratio.get_den()));
    mpq_class time = mpq_class(denominators) / gap.as_rational();
    if (time < 0) time = -time;
    return time;
}

// ---- synthesis ------------------------------------------------------------

namespace {

struct CoreTriple {
    unsigned long t = 0;               // common 2-adic valuation
    mpz_class k_core, th_core, ta_core;  // odd cores
};

// Shared-valuation odd-core decomposition of the (possibly shifted) triple;
// empty when no common valuation exists.
std::optional<CoreTriple> decompose_triple(const mpz_class& k, const mpz_class& th,
                                           const mpz_class& ta, std::string* why) {
    if (k == 0 || th == 0 || ta == 0) {
        if (why) *why = "zero entry in the eigenvalue triple";
        return std::nullopt;
    }
    const OddCore ck = odd_core(k), cth = odd_core(th), cta = odd_core(ta);
    if (ck.t != cth.t || cth.t != cta.t) {
        if (why)
            *why = "2-adic valuations differ: |k|=" + std::to_string(ck.t) +
                   ", |theta|=" + std::to_string(cth.t) + ", |tau|=" + std::to_string(cta.t);
        return std::nullopt;
    }
    CoreTriple out{ck.t, ck.core, cth.core, cta.core};
    if ((out.k_core - out.th_core) % 4 != 0 || (out.th_core - out.ta_core) % 4 != 0) {
        if (why) *why = "odd cores not congruent mod 4";
        return std::nullopt;
    }
    return out;
}

SynthesisResult synthesize_impl(const SrgParams& params, bool adjacent, long max_q) {
    if (!params.rational_eigenvalues())
        throw ExactError("irrational-eigenvalues: parity synthesis needs integer theta, tau");
    SynthesisResult result;
    if (!params.primitive() || params.m_theta < 2 || params.m_tau < 2) {
        result.impossible_reason = "degenerate parameters (imprimitive or multiplicity < 2)";
        return result;
    }
    const long shift = adjacent ? 1 : 0;
    const mpz_class k = mpz_class(params.k) + shift;
    const mpz_class th = mpz_class(params.theta_q().get_num()) + shift;
    const mpz_class ta = mpz_class(params.tau_q().get_num()) + shift;

    std::string why;
    const auto cores = decompose_triple(k, th, ta, &why);
    if (!cores) {
        result.impossible_reason = why;
        return result;
    }

    mpz_class scale;  // 2^t
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, cores->t);
    const mpz_class sum_cores = cores->th_core + cores->ta_core;
    const mpz_class prod_cores = cores->th_core * cores->ta_core;

    std::set<mpq_class> s_values;
    auto add_candidate = [&](const mpz_class& num, const mpz_class& den) {
        if (num == 0) return;  // trivial perturbation, nothing to verify
        mpq_class s(num * scale, den);
        s.canonicalize();
        s_values.insert(s);
    };
    // Canonical choice: s = 2^{t+1} (theta' + tau').
    add_candidate(2 * sum_cores, 1);
    // Single-parameter family: odd q congruent to theta' mod 4.
    for (long q = 1; q <= max_q; q += 2) {
        if ((mpz_class(q) - cores->th_core) % 4 != 0) continue;
        add_candidate(mpz_class(q) * q + prod_cores + q * sum_cores, mpz_class(q));
    }
    // Two-parameter family: odd q1, q2 with q1*q2 congruent to theta' mod 4.
    for (long q1 = 1; q1 <= max_q; q1 += 2)
        for (long q2 = 1; q2 <= max_q; q2 += 2) {
            const mpz_class qq = mpz_class(q1) * q2;
            if ((qq - cores->th_core) % 4 != 0) continue;
            add_candidate(mpz_class(q1) * q1 + mpz_class(q2) * q2 * prod_cores + qq * sum_cores, qq);
        }

    // Verify every candidate on the exact spectrum; drop the ones that fail.
    for (const auto& s : s_values) {
        PerturbSpec spec;
        spec.u = 0;
        spec.v = 1;
        spec.beta = -s / 2;
        spec.gamma = s / 2;
        spec.adjacent = adjacent;
        try {
            const PerturbedSpectrum spectrum = srg_perturbed_polys(params, spec);
            if (!strong_cospectrality(params, spec).strongly_cospectral) continue;
            const ParityWitness witness = pst_parity_check(spectrum);
            if (!witness.parity_ok) continue;
            PstCandidate cand;
            cand.beta = spec.beta;
            cand.gamma = spec.gamma;
            cand.witness = witness;
            cand.time_pi_multiple = pst_time_pi_multiple(witness);
            result.candidates.push_back(std::move(cand));
        } catch (const ExactError&) {
            continue;  // unverifiable candidate: drop, never emit unchecked
        }
    }
    result.possible = !result.candidates.empty();
    if (!result.possible)
        result.impossible_reason = "no candidate verified within the denominator bound";
    return result;
}

}  // namespace

SynthesisResult synthesize_beta_nonadjacent(const SrgParams& params, long max_q) {
    return synthesize_impl(params, false, max_q);
}

SynthesisResult synthesize_beta_adjacent(const SrgParams& params, long max_q) {
    return synthesize_impl(params, true, max_q);
}

// ---- closed-form family predicates ----------------------------------------

bool oa_pst_predicate(long k, long n, bool adjacent) {
    if (k < 2 || n < 2) throw ExactError("unsupported-parameters: OA predicate needs k, n >= 2");
    const unsigned long vn = two_adic_valuation(mpz_class(n));
    const unsigned long vk = two_adic_valuation(mpz_class(adjacent ? k - 1 : k));
    return vn >= vk + 2;
}

bool is_prime_power(long q) {
    if (q < 2) return false;
    long base = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            base = d;
            break;
        }
    while (q % base == 0) q /= base;
    return q == 1;
}

bool affine_polar_pst_predicate(long e, long q, int eps) {
    if (eps != 1 && eps != -1)
        throw ExactError("invalid-prime-power: eps must be +1 (hyperbolic) or -1 (elliptic)");
    if (e < 2 || !is_prime_power(q))
        throw ExactError("invalid-prime-power: need e >= 2 and prime-power q, got e=" +
                         std::to_string(e) + ", q=" + std::to_string(q));
    mpz_class qe, qe1;
    mpz_ui_pow_ui(qe.get_mpz_t(), q, e);
    mpz_ui_pow_ui(qe1.get_mpz_t(), q, e - 1);
    mpz_class k, th, ta;
    if (eps < 0) {  // elliptic
        k = (qe1 - 1) * (qe + 1);
        th = qe - qe1 - 1;
        ta = -qe1 - 1;
    } else {  // hyperbolic
        k = (qe1 + 1) * (qe - 1);
        th = qe1 - 1;
        ta = qe1 - qe - 1;
    }
    return decompose_triple(k, th, ta, nullptr).has_value();
}

}  // namespace srgpst
