#pragma once
// Exact real quadratic irrationals x + y*sqrt(d) with rational x, y and a
// squarefree positive integer radicand d. Rationals embed as y = 0, d = 0.
// Arithmetic between values is defined when their radicands agree or one
// operand is rational; sign and comparison are exact.

#include <gmpxx.h>
#include <json.hpp>
#include <string>

#include "srgpst/rational.hpp"

namespace srgpst {

class QuadExt {
public:
    QuadExt() : x_(0), y_(0), d_(0) {}
    QuadExt(mpq_class x) : x_(std::move(x)), y_(0), d_(0) {}  // NOLINT: implicit by design
    // x + y*sqrt(d); d >= 0. The square part of d is folded into y.
    QuadExt(mpq_class x, mpq_class y, mpz_class d);

    const mpq_class& rational_part() const { return x_; }
    const mpq_class& surd_coeff() const { return y_; }
    const mpz_class& radicand() const { return d_; }
    bool is_rational() const { return y_ == 0; }
    // The rational value; error when irrational.
    mpq_class as_rational() const;

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt operator-() const;
    QuadExt conjugate() const { return QuadExt(x_, -y_, d_); }

    // Exact sign: -1, 0, +1.
    int sign() const;
    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }

    double to_double() const;
    // "x + y*sqrt(d)" (or just "x" when rational).
    std::string to_string() const;
    // {"rational": "p/q"} or {"surd": {"x": "...", "y": "...", "d": "..."}}.
    nlohmann::ordered_json to_json() const;

private:
    void check_compatible(const QuadExt& o) const;
    mpq_class x_, y_;
    mpz_class d_;
};

// Roots of a*t^2 + b*t + c (rational coefficients, a != 0, real roots
// required). Returns {larger, smaller}; both rational when the discriminant is
// a perfect square.
struct QuadraticRoots {
    QuadExt larger, smaller;
    mpq_class discriminant;  // b^2 - 4ac
};
QuadraticRoots solve_quadratic(const mpq_class& a, const mpq_class& b, const mpq_class& c);

}  // namespace srgpst
