#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistroot/symplectic.hpp"

namespace twistroot::twistword {

/// One twist in a word: a named curve and an exponent of +1 or -1.
struct Letter {
    std::string curve;
    int exponent = 1;

    bool operator==(const Letter& o) const { return curve == o.curve && exponent == o.exponent; }
};

/// A word in the twist generators. Letters act rightmost-first on homology
/// classes, so evaluation multiplies the matrices left to right.
struct TwistWord {
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }

    /// Reversed letter order with flipped exponents.
    TwistWord inverse() const;

    /// Concatenation (this word applied after o... i.e. group product).
    TwistWord operator*(const TwistWord& o) const;

    bool operator==(const TwistWord& o) const { return letters == o.letters; }
};

TwistWord twist(const std::string& curve, int exponent = 1);

/// Named curve classes for one surface, loaded from a data table. Order of
/// records is preserved from the source.
struct CurveSystem {
    std::int64_t gplus1 = 0;
    std::vector<std::pair<std::string, symplectic::HomologyClass>> curves;

    const symplectic::HomologyClass* find(const std::string& name) const;
    const symplectic::HomologyClass& require(const std::string& name) const;
};

/// The building blocks of the degree-3 root word, from the star relation on
/// a chain of genus-1 pieces:
///   rho(1)       = (t_a1 t_b1)^2          -> a1 b1 a1 b1
///   rho(i), i<g  = t_ai^2 t_a'i t_bi      -> ai ai a'i bi
///   rho(g)       = t_ag t_gamma t_a'g t_bg -> ag gamma a'g bg
TwistWord rho(std::int64_t i, std::int64_t g);

/// Alternating product rho_g * rho_{g-1}^-1 * ... down to rho_1 (inverted
/// exactly when g is even, i.e. g+1 odd). Cubes to the square of the twist
/// about alpha_{g+1} in the symplectic representation.
TwistWord hhat(std::int64_t g);

/// h = t_{alpha_{g+1}} * hhat(g)^-1, the degree-3 root word of the twist
/// about alpha_{g+1}.
TwistWord degree3_root(std::int64_t g);

/// Homology action of a word: ordered product of transvections of the named
/// classes. A letter whose class is the zero vector (null-homologous curve)
/// acts as the identity.
symplectic::IntMatrix evaluate_word(const TwistWord& word, const CurveSystem& table,
                                    const symplectic::SymplecticForm& J);

struct Degree3Report {
    bool hhat_cubed_matches = false;  // phi(hhat)^3 == phi(t_alpha)^2
    bool root_cubed_matches = false;  // phi(h)^3   == phi(t_alpha)
    bool commutes = false;            // phi(hhat) and phi(t_alpha) commute

    bool all() const { return hhat_cubed_matches && root_cubed_matches && commutes; }
};

/// Verifies the degree-3 root word against a curve table in the symplectic
/// representation. This checks the identity at the homology level only; it is
/// a necessary condition for the mapping-class identity, not a proof of it.
Degree3Report verify_degree3(std::int64_t g, const CurveSystem& table);

struct RelationCheck {
    std::string kind;    // "nonzero-class", "null-homologous", "pairing-unit",
                         // "commute", "braid", "chain-shadow"
    std::string detail;  // which curves / what was checked
    bool passed = false;
};

/// Structural checks of a curve table: named classes nonzero (except the
/// separating s_j, which must be zero), <alpha_i, beta_i> = +-1, commuting
/// transvections for disjoint (pairing-zero) pairs, braid relation for
/// pairing +-1 pairs, and the homological shadow of rho_1^3 = t_{s_1}
/// (both sides act trivially).
std::vector<RelationCheck> sanity_relations(const CurveSystem& table);

}  // namespace twistroot::twistword
