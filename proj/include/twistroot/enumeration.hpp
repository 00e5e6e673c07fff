#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistroot/nielsen.hpp"

namespace twistroot::enumeration {

/// Multisets {lambda_1 <= ... <= lambda_k} of divisors of n (each > 1) with
///   sum_j (n / lambda_j)(lambda_j - 1) = 2g - 2 g' n.
/// Returns an empty list when the target weight is negative or unreachable.
std::vector<std::vector<std::int64_t>> orbit_multisets(std::int64_t g, std::int64_t n,
                                                       std::int64_t gprime);

struct EnumerationOptions {
    nielsen::BoundaryConvention convention = nielsen::BoundaryConvention::Unordered;
    /// Worker threads for the search. 1 runs the serial reference path;
    /// 0 uses the OpenMP default. Results are identical for every setting.
    int workers = 1;
};

/// All conjugacy data sets of degree-n roots of the twist about a
/// nonseparating curve in genus g, canonical forms in ascending order.
/// Quotient genus is scanned downward from floor(g/n); within each quotient
/// genus, orbit multisets and then residues are enumerated exhaustively.
std::vector<nielsen::DataSet> enumerate_datasets(std::int64_t g, std::int64_t n,
                                                 const EnumerationOptions& options = {});

bool exists_root(std::int64_t g, std::int64_t n, const EnumerationOptions& options = {});

struct SpectrumEntry {
    std::int64_t n = 0;      // root degree (always odd)
    std::int64_t count = 0;  // number of conjugacy classes of that degree
};

struct SpectrumReport {
    std::int64_t g = 0;
    std::vector<SpectrumEntry> entries;  // ascending by degree, zero counts omitted
};

/// Degrees n with at least one root in genus g, with class counts. Only odd
/// n in [3, 2g+1] can occur, so that range is scanned.
SpectrumReport degree_spectrum(std::int64_t g, const EnumerationOptions& options = {});

/// A genus-g surface with b1 + b2 boundary components and p punctures, where
/// the twisted curve is nonseparating, b1 boundary circles and all punctures
/// may be permuted, and b2 boundary circles must stay pointwise fixed.
struct MarkedSurfaceQuery {
    std::int64_t g = 1;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    std::int64_t p = 0;

    static MarkedSurfaceQuery make(std::int64_t g, std::int64_t b1, std::int64_t b2,
                                   std::int64_t p);
};

enum class MarkedVerdict {
    NoRoots,              // pointwise-fixed boundary rules out every nontrivial root
    NoRootsAtAll,         // genus-1 congruence rules out every nontrivial root
    NoDegreeMax,          // residue test rules out a root of degree 2g+1
    NoObstructionFound,   // none of the criteria above applies
};

std::string marked_verdict_name(MarkedVerdict v);

/// Every obstruction the marked-surface criteria can certify for q, in a
/// fixed order (NoRoots, NoRootsAtAll, NoDegreeMax). When none fires, the
/// single verdict NoObstructionFound is returned. The criteria are one-way:
/// NoObstructionFound does not promise that a root exists.
std::vector<MarkedVerdict> marked_obstructions(const MarkedSurfaceQuery& q);

}  // namespace twistroot::enumeration
