#pragma once
// Perfect state transfer on the perturbed graph, decided exactly through
// 2-adic parity of the eigenvalue-difference ratios.
//
// Strong cospectrality makes the transfer amplitude a signed sum over the
// balanced/skew support; perfect transfer at some time needs every ratio
// (lambda_1 - mu_i)/(lambda_1 - lambda_2) to be an odd/even rational with one
// common 2-adic denominator valuation r. The minimal time is then
// pi * lcm(denominators) / (lambda_1 - lambda_2).

#include <gmpxx.h>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "srgpst/perturbation.hpp"
#include "srgpst/rational.hpp"
#include "srgpst/srg.hpp"

namespace srgpst {

// One ratio (lambda_1 - mu)/(lambda_1 - lambda_2) with its parity data.
struct RatioEntry {
    QuadExt mu;           // balanced eigenvalue
    bool ratio_rational = false;
    mpq_class ratio;      // meaningful when ratio_rational
    bool numerator_odd = false;
    unsigned long denominator_val2 = 0;  // |denominator|_2

    nlohmann::ordered_json to_json() const;
};

// The exact witness data behind a parity decision. s = gamma - beta = p/q in
// lowest terms is the coefficient in the skew factor p2 - s*q2; alpha is the
// square root of its discriminant, A = p - q*sigma - alpha and
// B = p - q*sigma + alpha (sigma the relevant eigenvalue sum), so that
// B - A = 2*alpha and A*B = 4 q^2 * (eigenvalue product). All identities are
// asserted exactly whenever the discriminant is a perfect square.
struct ParityWitness {
    mpz_class p, q;           // s = gamma - beta = p/q, coprime, q > 0
    bool discriminant_square = false;
    mpz_class alpha, a_term, b_term;  // alpha, A, B when the discriminant is square
    QuadExt lambda1, lambda2;         // skew eigenvalues, lambda1 >= lambda2
    std::vector<RatioEntry> ratios;
    bool parity_ok = false;
    unsigned long r = 0;  // common |denominator|_2 when parity_ok
    std::string failure;  // first reason when !parity_ok

    nlohmann::ordered_json to_json() const;
};

// Decides condition (ii) of the transfer criterion on an exact perturbed
// spectrum: all ratios rational, odd numerators, even denominators with one
// common 2-adic valuation r >= 1.
ParityWitness pst_parity_check(const PerturbedSpectrum& spectrum);

// Minimal transfer time as an exact multiple of pi:
// lcm(denominators)/(lambda_1 - lambda_2), requiring a rational gap.
mpq_class pst_time_pi_multiple(const ParityWitness& w);

// ---- synthesis ------------------------------------------------------------

// A synthesized perturbation candidate, already verified by pst_parity_check.
struct PstCandidate {
    mpq_class beta, gamma;  // beta = -s/2, gamma = s/2
    ParityWitness witness;
    mpq_class time_pi_multiple;
};

struct SynthesisResult {
    bool possible = false;
    std::string impossible_reason;  // set when !possible
    std::vector<PstCandidate> candidates;
};

// All beta with beta + gamma = 0 making the perturbation admit perfect state
// transfer on a non-adjacent (resp. adjacent) pair, up to the denominator
// bound: the canonical candidate plus the odd-denominator families
// q = q1*q2 with q1*q2 congruent to the odd core of theta (mod 4). Existence
// requires (k, theta, tau) (resp. all three shifted by one) to share one
// 2-adic valuation with odd cores pairwise congruent mod 4.
// Errors: irrational-eigenvalues for conference parameters.
SynthesisResult synthesize_beta_nonadjacent(const SrgParams& params, long max_q = 99);
SynthesisResult synthesize_beta_adjacent(const SrgParams& params, long max_q = 99);

// ---- closed-form family predicates ----------------------------------------

// Orthogonal-array block graph of OA(k, n): perfect state transfer (for some
// rational beta, beta + gamma = 0) on a non-adjacent pair iff
// |n|_2 >= |k|_2 + 2, and on an adjacent pair iff |n|_2 >= |k-1|_2 + 2.
bool oa_pst_predicate(long k, long n, bool adjacent);

// Affine polar graphs VO^{eps}(2e, q), eps = +-1, e >= 2, q a prime power:
// the non-adjacent congruence condition holds iff q is even. Errors
// "invalid-prime-power" on bad (e, q).
bool affine_polar_pst_predicate(long e, long q, int eps);

bool is_prime_power(long q);

}  // namespace srgpst
