#pragma once
// Exact rational scalar utilities: parsing/printing of p/q literals,
// 2-adic valuations, odd parts, perfect-square tests.

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace srgpst {

// Thrown by every exact-arithmetic precondition violation in the library.
class ExactError : public std::runtime_error {
public:
    explicit ExactError(const std::string& what) : std::runtime_error(what) {}
};

// Parses a rational literal "p", "-p", or "p/q" (q > 0 after canonicalization).
// Decimal points, exponents, and embedded whitespace are rejected: inputs are
// meant to be exact, and "0.1" is not the rational 1/10 the user thinks it is.
inline mpq_class parse_rational(const std::string& raw) {
    // Surrounding whitespace is forgiven; anything else must be part of the
    // literal.
    const auto begin = raw.find_first_not_of(" \t");
    const auto end = raw.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ExactError("empty rational literal");
    const std::string text = raw.substr(begin, end - begin + 1);
    for (char ch : text) {
        const bool ok = (ch >= '0' && ch <= '9') || ch == '/' || ch == '-' || ch == '+';
        if (!ok) throw ExactError("invalid character '" + std::string(1, ch) +
                                  "' in rational literal \"" + text + "\" (decimals not accepted)");
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos && text.find('/', slash + 1) != std::string::npos)
        throw ExactError("multiple '/' in rational literal \"" + text + "\"");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ExactError("unparsable rational literal \"" + text + "\"");
    if (q.get_den() == 0) throw ExactError("zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// 2-adic valuation |m|_2 of a nonzero integer: the exponent of the largest
// power of two dividing m. Undefined (error) at zero.
inline unsigned long two_adic_valuation(const mpz_class& m) {
    if (m == 0) throw ExactError("two_adic_valuation undefined at 0");
    mpz_class a = abs(m);
    return mpz_scan1(a.get_mpz_t(), 0);
}

struct OddCore {
    unsigned long t = 0;  // shared 2-adic valuation
    mpz_class core;       // odd part, m = 2^t * core
};

inline OddCore odd_core(const mpz_class& m) {
    OddCore oc;
    oc.t = two_adic_valuation(m);
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, oc.t);
    oc.core = m / pow2;
    return oc;
}

inline bool is_perfect_square(const mpz_class& m) {
    if (m < 0) return false;
    return mpz_perfect_square_p(m.get_mpz_t()) != 0;
}

// Exact square root of a perfect square.
inline mpz_class isqrt_exact(const mpz_class& m) {
    if (!is_perfect_square(m)) throw ExactError("isqrt_exact of a non-square");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Square test for rationals: p/q (canonical) is a square iff p and q both are.
inline bool is_perfect_square(const mpq_class& q) {
    return q >= 0 && is_perfect_square(mpz_class(q.get_num())) &&
           is_perfect_square(mpz_class(q.get_den()));
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline double to_double(const mpq_class& q) { return q.get_d(); }

}  // namespace srgpst
