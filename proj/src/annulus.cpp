#include "twistroot/annulus.hpp"

#include <stdexcept>

namespace twistroot::annulus {

using arith::Rational;

AnnulusMap AnnulusMap::make(std::int64_t n, std::int64_t delta0, std::int64_t delta1) {
    if (n < 3) throw std::invalid_argument("AnnulusMap: degree must be >= 3");
    for (std::int64_t d : {delta0, delta1}) {
        if (d < 1 || d > n - 2)
            throw std::invalid_argument("AnnulusMap: delta must lie in [1, n-2]");
        if (arith::gcd(d, n) != 1)
            throw std::invalid_argument("AnnulusMap: delta must be coprime to n");
    }
    if (delta0 + delta1 != n - 1)
        throw std::invalid_argument("AnnulusMap: delta0 + delta1 must equal n - 1");
    return AnnulusMap{n, delta0, delta1};
}

Rational AnnulusMap::rotation_at(const Rational& t) const {
    return Rational(-delta0, n) * (Rational(1) - t) + Rational(delta1, n) * t;
}

AnnulusPoint AnnulusPoint::make(const Rational& t, const Rational& x) {
    if (t < Rational(0) || t > Rational(1))
        throw std::invalid_argument("AnnulusPoint: t must lie in [0, 1]");
    return AnnulusPoint{t, x.mod1()};
}

AnnulusPoint apply(const AnnulusMap& m, const AnnulusPoint& p) {
    return AnnulusPoint{p.t, (p.x + m.rotation_at(p.t)).mod1()};
}

AnnulusPoint power(const AnnulusMap& m, std::int64_t k, const AnnulusPoint& p) {
    if (k < 0) throw std::invalid_argument("power: exponent must be >= 0");
    return AnnulusPoint{p.t, (p.x + Rational(k) * m.rotation_at(p.t)).mod1()};
}

std::int64_t twist_defect(const AnnulusMap& m) {
    std::int64_t defect = m.delta0 + m.delta1;
    if (defect != m.n - 1)
        throw std::logic_error("twist_defect: map violates delta0 + delta1 = n - 1");
    return defect;
}

}  // namespace twistroot::annulus
