#include "srgpst/quadratic_field.hpp"

#include <cmath>
#include <sstream>

namespace srgpst {

namespace {

// Splits m = s^2 * f with f squarefree, returning {s, f}. Trial division up
// to 10^6 then a final perfect-square check covers every radicand produced by
// discriminants at this library's scale.
std::pair<mpz_class, mpz_class> square_split(mpz_class m) {
    mpz_class s(1);
    for (mpz_class p(2); p <= 1000000 && p * p <= m; ++p) {
        mpz_class p2 = p * p;
        while (m % p2 == 0) {
            m /= p2;
            s *= p;
        }
    }
    if (is_perfect_square(m)) {
        s *= isqrt_exact(m);
        m = 1;
    }
    return {s, m};
}

}  // namespace

QuadExt::QuadExt(mpq_class x, mpq_class y, mpz_class d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
    if (d_ < 0) throw ExactError("negative radicand (complex values unsupported)");
    if (y_ == 0 || d_ == 0) {
        y_ = 0;
        d_ = 0;
        return;
    }
    auto [sq, free] = square_split(d_);
    y_ *= mpq_class(sq);
    d_ = free;
    if (d_ == 1) {  // sqrt(1): fold into the rational part
        x_ += y_;
        y_ = 0;
        d_ = 0;
    }
}

mpq_class QuadExt::as_rational() const {
    if (!is_rational()) throw ExactError("irrational value where a rational was required: " + to_string());
    return x_;
}

void QuadExt::check_compatible(const QuadExt& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw ExactError("mixed radicands " + d_.get_str() + " and " + o.d_.get_str());
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    check_compatible(o);
    const mpz_class d = is_rational() ? o.d_ : d_;
    return QuadExt(x_ + o.x_, y_ + o.y_, d);
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator-() const { return QuadExt(-x_, -y_, d_); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    check_compatible(o);
    const mpz_class d = is_rational() ? o.d_ : d_;
    // (x + y s)(x' + y' s) = xx' + yy' d + (xy' + x'y) s  with s = sqrt(d)
    return QuadExt(x_ * o.x_ + y_ * o.y_ * mpq_class(d), x_ * o.y_ + o.x_ * y_, d);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    check_compatible(o);
    if (o.sign() == 0) throw ExactError("division by zero");
    // Multiply by the conjugate; the norm x'^2 - y'^2 d is rational.
    const mpq_class norm = o.x_ * o.x_ - o.y_ * o.y_ * mpq_class(o.d_);
    if (o.is_rational()) return QuadExt(x_ / o.x_, y_ / o.x_, d_);
    QuadExt num = *this * o.conjugate();
    return QuadExt(num.x_ / norm, num.y_ / norm, num.d_);
}

int QuadExt::sign() const {
    const int sx = sgn(x_);
    const int sy = sgn(y_);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: compare x^2 against y^2 d; the larger magnitude wins.
    const mpq_class lhs = x_ * x_;
    const mpq_class rhs = y_ * y_ * mpq_class(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sx : sy;
}

bool QuadExt::operator==(const QuadExt& o) const {
    return x_ == o.x_ && y_ == o.y_ && d_ == o.d_;
}

double QuadExt::to_double() const {
    return x_.get_d() + y_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadExt::to_string() const {
    if (is_rational()) return rational_str(x_);
    std::ostringstream out;
    out << rational_str(x_);
    out << (y_ < 0 ? " - " : " + ");
    const mpq_class mag = abs(y_);
    if (mag != 1) out << rational_str(mag) << "*";
    out << "sqrt(" << d_.get_str() << ")";
    return out.str();
}

nlohmann::ordered_json QuadExt::to_json() const {
    nlohmann::ordered_json j;
    if (is_rational()) {
        j["rational"] = rational_str(x_);
    } else {
        j["surd"] = {{"x", rational_str(x_)}, {"y", rational_str(y_)}, {"d", d_.get_str()}};
    }
    return j;
}

QuadraticRoots solve_quadratic(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
    if (a == 0) throw ExactError("solve_quadratic with zero leading coefficient");
    const mpq_class disc = b * b - 4 * a * c;
    if (disc < 0) throw ExactError("complex quadratic roots (discriminant < 0)");
    QuadraticRoots out;
    out.discriminant = disc;
    if (is_perfect_square(disc)) {
        const mpq_class root(isqrt_exact(mpz_class(disc.get_num())),
                             isqrt_exact(mpz_class(disc.get_den())));
        const mpq_class r1 = (-b + root) / (2 * a);
        const mpq_class r2 = (-b - root) / (2 * a);
        out.larger = QuadExt(std::max(r1, r2));
        out.smaller = QuadExt(std::min(r1, r2));
    } else {
        // (-b \pm sqrt(disc))/(2a): express sqrt(p/q) = sqrt(p q)/q.
        const mpz_class num = disc.get_num(), den = disc.get_den();
        const mpq_class mid = -b / (2 * a);
        mpq_class spread = mpq_class(1, den) / (2 * a);
        QuadExt plus(mid, abs(spread), num * den);
        QuadExt minus(mid, -abs(spread), num * den);
        out.larger = plus;
        out.smaller = minus;
    }
    return out;
}

}  // namespace srgpst
