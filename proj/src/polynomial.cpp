#include "srgpst/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace srgpst {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const mpq_class& a) { return RatPoly({a}); }

RatPoly RatPoly::x() { return RatPoly({mpq_class(0), mpq_class(1)}); }

RatPoly RatPoly::from_roots(const std::vector<mpq_class>& roots) {
    RatPoly p = constant(1);
    for (const auto& r : roots) p = p * RatPoly({-r, mpq_class(1)});
    return p;
}

mpq_class RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return mpq_class(0);
    return c_[i];
}

mpq_class RatPoly::leading() const {
    if (is_zero()) throw ExactError("leading coefficient of the zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<mpq_class> r = c_;
    for (auto& a : r) a = -a;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> r = c_;
    for (auto& a : r) a *= s;
    return RatPoly(std::move(r));
}

mpq_class RatPoly::evaluate(const mpq_class& t) const {
    mpq_class v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

double RatPoly::evaluate(double t) const {
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + it->get_d();
    return v;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<mpq_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
    return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (mpq_class(1) / leading());
}

RatPoly::DivMod RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw ExactError("polynomial division by zero");
    RatPoly rem = *this;
    std::vector<mpq_class> quot;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) quot.assign(rem.degree() - dd + 1, mpq_class(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const mpq_class factor = rem.leading() / divisor.leading();
        quot[shift] = factor;
        std::vector<mpq_class> sub(shift, mpq_class(0));
        for (const auto& a : divisor.c_) sub.push_back(a * factor);
        rem = rem - RatPoly(std::move(sub));
    }
    return {RatPoly(std::move(quot)), rem};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<mpz_class> RatPoly::primitive_integer_coeffs() const {
    if (is_zero()) return {};
    mpz_class den_lcm(1);
    for (const auto& a : c_) den_lcm = lcm(den_lcm, mpz_class(a.get_den()));
    std::vector<mpz_class> ints;
    ints.reserve(c_.size());
    mpz_class content(0);
    for (const auto& a : c_) {
        mpq_class scaled = a * mpq_class(den_lcm);
        ints.emplace_back(scaled.get_num());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
        content = g;
    }
    for (auto& v : ints) v /= content;
    return ints;
}

namespace {

// Positive divisors of |m| by trial division (fine at the coefficient sizes
// this library produces; roots are sought for charpoly-scale inputs).
std::vector<mpz_class> positive_divisors(mpz_class m) {
    m = abs(m);
    std::vector<mpz_class> low, high;
    for (mpz_class d(1); d * d <= m; ++d) {
        if (m % d == 0) {
            low.push_back(d);
            if (d * d != m) high.push_back(m / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

}  // namespace

std::vector<mpq_class> RatPoly::rational_roots() const {
    if (is_zero()) throw ExactError("rational_roots of the zero polynomial");
    std::vector<mpq_class> roots;
    RatPoly p = *this;
    // Factor out t^m first so the constant coefficient below is nonzero.
    size_t nz = 0;
    while (nz < p.c_.size() && p.c_[nz] == 0) ++nz;
    for (size_t i = 0; i < nz; ++i) roots.emplace_back(0);
    if (nz > 0) p = p.divmod(RatPoly::from_roots(std::vector<mpq_class>(nz, mpq_class(0)))).quot;
    if (p.degree() >= 1) {
        const auto ints = p.primitive_integer_coeffs();
        const auto ps = positive_divisors(ints.front());
        const auto qs = positive_divisors(ints.back());
        std::vector<mpq_class> candidates;
        for (const auto& pp : ps)
            for (const auto& qq : qs) {
                mpq_class cand(pp, qq);
                cand.canonicalize();
                candidates.push_back(cand);
                candidates.push_back(-cand);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& cand : candidates) {
            while (p.degree() >= 1 && p.evaluate(cand) == 0) {
                roots.push_back(cand);
                p = p.divmod(RatPoly({-cand, mpq_class(1)})).quot;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RatPoly RatPoly::interpolate(const std::vector<mpq_class>& nodes,
                             const std::vector<mpq_class>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw ExactError("interpolate: node/value count mismatch");
    // Newton's divided differences: numerically irrelevant here (all exact),
    // but O(n^2) instead of Lagrange's O(n^2) with smaller intermediates.
    const size_t n = nodes.size();
    std::vector<mpq_class> dd = values;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            const mpq_class denom = nodes[i] - nodes[i - level];
            if (denom == 0) throw ExactError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / denom;
            if (i == level) break;
        }
    RatPoly result = constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;)
        result = result * RatPoly({-nodes[i], mpq_class(1)}) + constant(dd[i]);
    return result;
}

nlohmann::ordered_json RatPoly::to_json() const {
    nlohmann::ordered_json j;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& a : c_) j["coeffs"].push_back(rational_str(a));
    return j;
}

RatPoly RatPoly::from_json(const nlohmann::json& j) {
    std::vector<mpq_class> coeffs;
    for (const auto& item : j.at("coeffs")) coeffs.push_back(parse_rational(item.get<std::string>()));
    return RatPoly(std::move(coeffs));
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class a = coeff(i);
        if (a == 0) continue;
        const mpq_class mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1) && i > 0;
        if (!unit) out << rational_str(mag);
        if (i > 0) {
            if (!unit) out << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace srgpst
