#pragma once
// Dense univariate polynomials over the rationals, exact arithmetic throughout.
// Coefficients are stored lowest-degree first; the zero polynomial has an
// empty coefficient vector and degree -1.

#include <gmpxx.h>
#include <json.hpp>
#include <string>
#include <vector>

#include "srgpst/rational.hpp"

namespace srgpst {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const mpq_class& a);
    static RatPoly x();  // the monomial t
    // (t - r0)(t - r1)... for the given roots.
    static RatPoly from_roots(const std::vector<mpq_class>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    // Coefficient of t^i (zero beyond the degree).
    mpq_class coeff(int i) const;
    mpq_class leading() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& s) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    mpq_class evaluate(const mpq_class& t) const;
    double evaluate(double t) const;
    RatPoly derivative() const;
    RatPoly monic() const;

    // Exact Euclidean division; throws on division by zero.
    struct DivMod;
    DivMod divmod(const RatPoly& divisor) const;

    // Monic gcd via the Euclidean algorithm (gcd(0,0) = 0).
    static RatPoly gcd(RatPoly a, RatPoly b);

    // Primitive integer form: multiplies away denominators and divides out the
    // integer content; the sign of the leading coefficient is preserved.
    std::vector<mpz_class> primitive_integer_coeffs() const;

    // All rational roots with multiplicity, sorted ascending.
    std::vector<mpq_class> rational_roots() const;

    // Lagrange interpolation through (node, value) pairs with distinct nodes.
    static RatPoly interpolate(const std::vector<mpq_class>& nodes,
                               const std::vector<mpq_class>& values);

    // JSON: {"coeffs": ["a0", "a1", ...]} lowest-degree first, "p/q" literals.
    nlohmann::ordered_json to_json() const;
    static RatPoly from_json(const nlohmann::json& j);

    // Human form, highest degree first: "t^3 - 4*t^2 - 10*t + 21".
    std::string to_string() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

struct RatPoly::DivMod {
    RatPoly quot, rem;
};

}  // namespace srgpst
