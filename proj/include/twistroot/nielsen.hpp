#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistroot/arith.hpp"

namespace twistroot::nielsen {

/// Raised by genus_of when the degree/orbit data forces an odd value of 2g.
class NonIntegralGenus : public std::domain_error {
public:
    explicit NonIntegralGenus(const std::string& what) : std::domain_error(what) {}
};

/// Orbit invariant (m, lambda, sigma) of a periodic map near a multiple point:
/// m is the orbit count, lambda the local multiplicity, sigma the rotation
/// numerator with 0 <= sigma < lambda and gcd(sigma, lambda) = 1.
struct Valency {
    std::int64_t m = 0;
    std::int64_t lambda = 1;
    std::int64_t sigma = 0;

    static Valency make(std::int64_t m, std::int64_t lambda, std::int64_t sigma);
};

/// Companion invariant (m, lambda, delta) with sigma * delta == 1 (mod lambda).
struct SecondValency {
    std::int64_t m = 0;
    std::int64_t lambda = 1;
    std::int64_t delta = 0;
};

SecondValency second_valency(const Valency& v);

enum class BoundaryConvention {
    Unordered,  // the two boundary valencies form a multiset
    Ordered,    // the two boundary valencies are distinguished
};

/// Valencies (sigma0, sigma1) carried by the two boundary circles of the
/// complement annulus neighborhood, for a root of degree n. Each sigma is in
/// [1, n-1] and coprime to n. delta0/delta1 are the matching second-valency
/// numerators.
struct BoundaryPair {
    std::int64_t n = 1;
    std::int64_t sigma0 = 0;
    std::int64_t sigma1 = 0;

    static BoundaryPair make(std::int64_t n, std::int64_t sigma0, std::int64_t sigma1);

    std::int64_t delta0() const;
    std::int64_t delta1() const;

    bool operator==(const BoundaryPair& o) const {
        return n == o.n && sigma0 == o.sigma0 && sigma1 == o.sigma1;
    }
};

/// All boundary pairs admissible for degree n: sigma0, sigma1 coprime to n
/// with sigma0 + sigma1 + sigma0*sigma1 == 0 (mod n). Ordered convention
/// lists both (a, b) and (b, a); unordered keeps sigma0 <= sigma1 only.
std::vector<BoundaryPair> boundary_pairs(
    std::int64_t n, BoundaryConvention convention = BoundaryConvention::Ordered);

/// One interior orbit's (sigma, lambda) with lambda > 1, 1 <= sigma < lambda,
/// gcd(sigma, lambda) = 1, and lambda dividing the degree.
struct OrbitEntry {
    std::int64_t sigma = 1;
    std::int64_t lambda = 2;

    bool operator==(const OrbitEntry& o) const { return sigma == o.sigma && lambda == o.lambda; }
    bool operator<(const OrbitEntry& o) const {
        if (lambda != o.lambda) return lambda < o.lambda;
        return sigma < o.sigma;
    }
};

/// Conjugacy data [n, g', (sigma0, sigma1); (sigma_1, lambda_1), ...] of a
/// candidate root of degree n: quotient genus g', boundary valencies, and the
/// multiset of interior orbit valencies. make() enforces the structural
/// invariants (ranges, coprimality, divisibility); whether the data actually
/// fits a given surface genus is validate_dataset's job.
struct DataSet {
    std::int64_t n = 1;
    std::int64_t gprime = 0;
    BoundaryPair boundary;
    std::vector<OrbitEntry> orbits;

    static DataSet make(std::int64_t n, std::int64_t gprime, BoundaryPair boundary,
                        std::vector<OrbitEntry> orbits);

    bool operator==(const DataSet& o) const {
        return n == o.n && gprime == o.gprime && boundary == o.boundary && orbits == o.orbits;
    }
    bool operator<(const DataSet& o) const;
};

/// Canonical representative: orbits sorted by (lambda, sigma); under the
/// unordered convention the boundary pair is sorted as well.
DataSet canonical_form(const DataSet& d,
                       BoundaryConvention convention = BoundaryConvention::Unordered);

bool equivalent(const DataSet& a, const DataSet& b,
                BoundaryConvention convention = BoundaryConvention::Unordered);

/// Surface genus determined by the degree/orbit data via
///   2g = 2 g' n + sum_j (n / lambda_j)(lambda_j - 1).
/// Throws NonIntegralGenus if the right-hand side is odd.
std::int64_t genus_of(const DataSet& d);

enum class Condition {
    GenusCount,    // 2g = 2 g' n + sum_j (n/lambda_j)(lambda_j - 1)
    ValencySum,    // sum_j sigma_j (n/lambda_j) + sigma0 + sigma1 == 0 (mod n)
    BoundaryPair,  // sigma0 + sigma1 + sigma0*sigma1 == 0 (mod n)
};

std::string condition_name(Condition c);

struct ValidationReport {
    bool valid = false;
    std::vector<Condition> violated;
};

/// Checks the three compatibility conditions of d against surface genus g.
ValidationReport validate_dataset(const DataSet& d, std::int64_t g);

/// Fractional twisting data of an annular piece: screw value s, whether the
/// piece is amphidrome, and the annulus multiplicity alpha.
struct ScrewData {
    arith::Rational s;
    bool amphidrome = false;
    std::int64_t alpha = 1;

    /// The annular piece around the twisted curve for a degree-n root:
    /// non-amphidrome, multiplicity n, screw value 1/n.
    static ScrewData for_root(std::int64_t n);
};

/// Sum s + delta0/lambda0 + delta1/lambda1 that must be an integer for a
/// non-amphidrome annular piece.
arith::Rational screw_sum(const ScrewData& sd, std::int64_t lambda0, std::int64_t delta0,
                          std::int64_t lambda1, std::int64_t delta1);

struct ScrewReport {
    bool consistent = false;
    arith::Rational value;  // the integrality-constrained sum
};

/// Integrality of the screw sum for d's annular piece; for valid root data
/// the sum is (1 + delta0 + delta1)/n = 1.
ScrewReport screw_consistency(const DataSet& d);

}  // namespace twistroot::nielsen
