#include "twistroot/nielsen.hpp"

#include <algorithm>
#include <tuple>

namespace twistroot::nielsen {

using arith::checked_add;
using arith::checked_mul;

Valency Valency::make(std::int64_t m, std::int64_t lambda, std::int64_t sigma) {
    if (m < 1) throw std::invalid_argument("Valency: orbit count must be >= 1");
    if (lambda < 1) throw std::invalid_argument("Valency: multiplicity must be >= 1");
    if (sigma < 0 || sigma >= lambda)
        throw std::invalid_argument("Valency: sigma must lie in [0, lambda)");
    if (arith::gcd(sigma, lambda) != 1)
        throw std::invalid_argument("Valency: sigma must be coprime to lambda");
    return Valency{m, lambda, sigma};
}

SecondValency second_valency(const Valency& v) {
    auto inv = arith::mod_inverse(v.sigma, v.lambda);
    // Unreachable for a well-formed Valency, but keep the failure loud.
    if (!inv) throw std::invalid_argument("second_valency: sigma not invertible mod lambda");
    return SecondValency{v.m, v.lambda, *inv};
}

BoundaryPair BoundaryPair::make(std::int64_t n, std::int64_t sigma0, std::int64_t sigma1) {
    if (n < 1) throw std::invalid_argument("BoundaryPair: degree must be >= 1");
    for (std::int64_t s : {sigma0, sigma1}) {
        if (s < 1 || s > n - 1)
            throw std::invalid_argument("BoundaryPair: sigma must lie in [1, n-1]");
        if (arith::gcd(s, n) != 1)
            throw std::invalid_argument("BoundaryPair: sigma must be coprime to n");
    }
    return BoundaryPair{n, sigma0, sigma1};
}

std::int64_t BoundaryPair::delta0() const {
    return *arith::mod_inverse(sigma0, n);
}

std::int64_t BoundaryPair::delta1() const {
    return *arith::mod_inverse(sigma1, n);
}

std::vector<BoundaryPair> boundary_pairs(std::int64_t n, BoundaryConvention convention) {
    if (n < 1) throw std::invalid_argument("boundary_pairs: degree must be >= 1");
    std::vector<BoundaryPair> out;
    for (std::int64_t s0 = 1; s0 < n; ++s0) {
        if (arith::gcd(s0, n) != 1) continue;
        std::int64_t s1_lo = (convention == BoundaryConvention::Unordered) ? s0 : 1;
        for (std::int64_t s1 = s1_lo; s1 < n; ++s1) {
            if (arith::gcd(s1, n) != 1) continue;
            if ((s0 + s1 + s0 * s1) % n != 0) continue;
            out.push_back(BoundaryPair{n, s0, s1});
        }
    }
    return out;
}

DataSet DataSet::make(std::int64_t n, std::int64_t gprime, BoundaryPair boundary,
                      std::vector<OrbitEntry> orbits) {
    if (n < 1) throw std::invalid_argument("DataSet: degree must be >= 1");
    if (gprime < 0) throw std::invalid_argument("DataSet: quotient genus must be >= 0");
    if (boundary.n != n) throw std::invalid_argument("DataSet: boundary pair degree mismatch");
    // Re-check boundary invariants in case the pair was aggregate-initialized.
    BoundaryPair::make(boundary.n, boundary.sigma0, boundary.sigma1);
    for (const OrbitEntry& e : orbits) {
        if (e.lambda < 2) throw std::invalid_argument("DataSet: orbit multiplicity must be >= 2");
        if (n % e.lambda != 0)
            throw std::invalid_argument("DataSet: orbit multiplicity must divide the degree");
        if (e.sigma < 1 || e.sigma >= e.lambda)
            throw std::invalid_argument("DataSet: orbit sigma must lie in [1, lambda)");
        if (arith::gcd(e.sigma, e.lambda) != 1)
            throw std::invalid_argument("DataSet: orbit sigma must be coprime to lambda");
    }
    return DataSet{n, gprime, boundary, std::move(orbits)};
}

bool DataSet::operator<(const DataSet& o) const {
    return std::tie(n, gprime, boundary.sigma0, boundary.sigma1, orbits) <
           std::tie(o.n, o.gprime, o.boundary.sigma0, o.boundary.sigma1, o.orbits);
}

DataSet canonical_form(const DataSet& d, BoundaryConvention convention) {
    DataSet c = d;
    std::sort(c.orbits.begin(), c.orbits.end());
    if (convention == BoundaryConvention::Unordered && c.boundary.sigma0 > c.boundary.sigma1)
        std::swap(c.boundary.sigma0, c.boundary.sigma1);
    return c;
}

bool equivalent(const DataSet& a, const DataSet& b, BoundaryConvention convention) {
    return canonical_form(a, convention) == canonical_form(b, convention);
}

std::int64_t genus_of(const DataSet& d) {
    std::int64_t twice_g = checked_mul(2, checked_mul(d.gprime, d.n));
    for (const OrbitEntry& e : d.orbits)
        twice_g = checked_add(twice_g, checked_mul(d.n / e.lambda, e.lambda - 1));
    if (twice_g % 2 != 0)
        throw NonIntegralGenus("genus_of: orbit data forces an odd value of 2g");
    return twice_g / 2;
}

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::GenusCount: return "genus-count";
        case Condition::ValencySum: return "valency-sum";
        case Condition::BoundaryPair: return "boundary-pair";
    }
    return "unknown";
}

ValidationReport validate_dataset(const DataSet& d, std::int64_t g) {
    if (g < 1) throw std::invalid_argument("validate_dataset: genus must be >= 1");
    ValidationReport report;

    std::int64_t twice_g = checked_mul(2, checked_mul(d.gprime, d.n));
    for (const OrbitEntry& e : d.orbits)
        twice_g = checked_add(twice_g, checked_mul(d.n / e.lambda, e.lambda - 1));
    if (twice_g != checked_mul(2, g)) report.violated.push_back(Condition::GenusCount);

    std::int64_t total = checked_add(d.boundary.sigma0, d.boundary.sigma1) % d.n;
    for (const OrbitEntry& e : d.orbits)
        total = checked_add(total, checked_mul(e.sigma, d.n / e.lambda)) % d.n;
    if (total % d.n != 0) report.violated.push_back(Condition::ValencySum);

    std::int64_t b = checked_add(checked_add(d.boundary.sigma0, d.boundary.sigma1),
                                 checked_mul(d.boundary.sigma0, d.boundary.sigma1));
    if (b % d.n != 0) report.violated.push_back(Condition::BoundaryPair);

    report.valid = report.violated.empty();
    return report;
}

ScrewData ScrewData::for_root(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("ScrewData: degree must be >= 1");
    return ScrewData{arith::Rational(1, n), false, n};
}

arith::Rational screw_sum(const ScrewData& sd, std::int64_t lambda0, std::int64_t delta0,
                          std::int64_t lambda1, std::int64_t delta1) {
    return sd.s + arith::Rational(delta0, lambda0) + arith::Rational(delta1, lambda1);
}

ScrewReport screw_consistency(const DataSet& d) {
    ScrewData sd = ScrewData::for_root(d.n);
    arith::Rational value =
        screw_sum(sd, d.n, d.boundary.delta0(), d.n, d.boundary.delta1());
    return ScrewReport{value.is_integer(), value};
}

}  // namespace twistroot::nielsen
