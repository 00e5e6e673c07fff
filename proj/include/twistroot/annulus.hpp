#pragma once

#include <cstdint>

#include "twistroot/arith.hpp"

namespace twistroot::annulus {

/// The interpolated rotation on the annulus [0,1] x S^1 glued between the
/// two boundary valencies of a degree-n root: rotation by -delta0/n of a
/// full turn at t=0, +delta1/n at t=1, affine in t between them.
struct AnnulusMap {
    std::int64_t n = 3;
    std::int64_t delta0 = 1;
    std::int64_t delta1 = 1;

    static AnnulusMap make(std::int64_t n, std::int64_t delta0, std::int64_t delta1);

    /// Rotation (fraction of a full turn) applied at height t:
    /// -(delta0/n)(1-t) + (delta1/n) t.
    arith::Rational rotation_at(const arith::Rational& t) const;
};

/// Point (t, x) with t in [0,1] and x an angle in Q/Z, kept in [0,1).
struct AnnulusPoint {
    arith::Rational t;
    arith::Rational x;

    static AnnulusPoint make(const arith::Rational& t, const arith::Rational& x);

    bool operator==(const AnnulusPoint& o) const { return t == o.t && x == o.x; }
};

/// One application of the map: (t, x) -> (t, x + rotation_at(t) mod 1).
AnnulusPoint apply(const AnnulusMap& m, const AnnulusPoint& p);

/// k-fold composition (t is invariant, so the rotations add). For k = n the
/// x-displacement is (n-1) t - delta0 modulo 1, the gluing identity that
/// makes the n-th power a (1-n)-fold boundary twist.
AnnulusPoint power(const AnnulusMap& m, std::int64_t k, const AnnulusPoint& p);

/// Integer coefficient of t in the n-th power's displacement: delta0 + delta1,
/// always n - 1 for a valid map. The n-th power is thus isotopic to the
/// inverse (n-1)-fold twist, so composing the interpolation with one twist
/// yields a degree-n root of the twist.
std::int64_t twist_defect(const AnnulusMap& m);

}  // namespace twistroot::annulus
