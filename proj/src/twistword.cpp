#include "twistroot/twistword.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistroot::twistword {

using symplectic::HomologyClass;
using symplectic::IntMatrix;
using symplectic::SymplecticForm;

TwistWord TwistWord::inverse() const {
    TwistWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(Letter{it->curve, -it->exponent});
    return w;
}

TwistWord TwistWord::operator*(const TwistWord& o) const {
    TwistWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

TwistWord twist(const std::string& curve, int exponent) {
    if (curve.empty()) throw std::invalid_argument("twist: curve name must be nonempty");
    if (exponent != 1 && exponent != -1)
        throw std::invalid_argument("twist: exponent must be +1 or -1");
    return TwistWord{{Letter{curve, exponent}}};
}

const HomologyClass* CurveSystem::find(const std::string& name) const {
    for (const auto& [n, cls] : curves)
        if (n == name) return &cls;
    return nullptr;
}

const HomologyClass& CurveSystem::require(const std::string& name) const {
    const HomologyClass* cls = find(name);
    if (!cls) throw std::out_of_range("curve table has no class for '" + name + "'");
    return *cls;
}

namespace {

std::string curve_alpha(std::int64_t i) { return "alpha" + std::to_string(i); }
std::string curve_alpha_prime(std::int64_t i) { return "alpha_prime" + std::to_string(i); }
std::string curve_beta(std::int64_t i) { return "beta" + std::to_string(i); }

}  // namespace

TwistWord rho(std::int64_t i, std::int64_t g) {
    if (g < 2) throw std::invalid_argument("rho: g must be >= 2");
    if (i < 1 || i > g) throw std::invalid_argument("rho: index must lie in [1, g]");
    TwistWord w;
    if (i == 1) {
        w.letters = {Letter{curve_alpha(1), 1}, Letter{curve_beta(1), 1},
                     Letter{curve_alpha(1), 1}, Letter{curve_beta(1), 1}};
    } else if (i == g) {
        w.letters = {Letter{curve_alpha(g), 1}, Letter{"gamma", 1},
                     Letter{curve_alpha_prime(g), 1}, Letter{curve_beta(g), 1}};
    } else {
        w.letters = {Letter{curve_alpha(i), 1}, Letter{curve_alpha(i), 1},
                     Letter{curve_alpha_prime(i), 1}, Letter{curve_beta(i), 1}};
    }
    return w;
}

TwistWord hhat(std::int64_t g) {
    if (g < 2) throw std::invalid_argument("hhat: g must be >= 2");
    TwistWord w;
    for (std::int64_t i = g; i >= 1; --i) {
        TwistWord r = rho(i, g);
        // Exponent alternates starting from +1 at i = g.
        if ((g - i) % 2 == 1) r = r.inverse();
        w = w * r;
    }
    return w;
}

TwistWord degree3_root(std::int64_t g) {
    if (g < 2) throw std::invalid_argument("degree3_root: g must be >= 2");
    return twist(curve_alpha(g + 1)) * hhat(g).inverse();
}

IntMatrix evaluate_word(const TwistWord& word, const CurveSystem& table,
                        const SymplecticForm& J) {
    IntMatrix m = IntMatrix::identity(J.mat.dim());
    for (const Letter& letter : word.letters) {
        if (letter.exponent != 1 && letter.exponent != -1)
            throw std::invalid_argument("evaluate_word: exponent must be +1 or -1");
        const HomologyClass& cls = table.require(letter.curve);
        // Twists about null-homologous curves act trivially on homology.
        if (std::all_of(cls.begin(), cls.end(), [](std::int64_t x) { return x == 0; }))
            continue;
        m = m * symplectic::transvection(cls, J, letter.exponent);
    }
    return m;
}

Degree3Report verify_degree3(std::int64_t g, const CurveSystem& table) {
    if (g < 2) throw std::invalid_argument("verify_degree3: g must be >= 2");
    if (table.gplus1 != g + 1)
        throw std::invalid_argument("verify_degree3: table covers gplus1 = " +
                                    std::to_string(table.gplus1) + ", expected " +
                                    std::to_string(g + 1));
    SymplecticForm J = symplectic::standard_J(table.gplus1);
    IntMatrix t_alpha = evaluate_word(twist(curve_alpha(g + 1)), table, J);
    IntMatrix hh = evaluate_word(hhat(g), table, J);
    IntMatrix h = evaluate_word(degree3_root(g), table, J);

    Degree3Report report;
    report.hhat_cubed_matches = hh.pow(3) == t_alpha.pow(2);
    report.root_cubed_matches = h.pow(3) == t_alpha;
    report.commutes = hh * t_alpha == t_alpha * hh;
    return report;
}

namespace {

bool is_zero_class(const HomologyClass& c) {
    return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

std::vector<RelationCheck> sanity_relations(const CurveSystem& table) {
    if (table.gplus1 < 2) throw std::invalid_argument("sanity_relations: gplus1 must be >= 2");
    SymplecticForm J = symplectic::standard_J(table.gplus1);
    std::vector<RelationCheck> out;

    // Class shape: separating s_j curves are null-homologous, everything
    // else must carry a nonzero class.
    for (const auto& [name, cls] : table.curves) {
        bool is_sep = name.rfind("s", 0) == 0 && name.size() > 1 &&
                      std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        if (is_sep)
            out.push_back(RelationCheck{"null-homologous", name, is_zero_class(cls)});
        else
            out.push_back(RelationCheck{"nonzero-class", name, !is_zero_class(cls)});
    }

    // <alpha_i, beta_i> = +-1 for every matched pair present in the table.
    for (std::int64_t i = 1; i <= table.gplus1; ++i) {
        const HomologyClass* a = table.find(curve_alpha(i));
        const HomologyClass* b = table.find(curve_beta(i));
        if (!a || !b) continue;
        std::int64_t p = symplectic::pairing(*a, *b, J);
        out.push_back(RelationCheck{"pairing-unit",
                                    curve_alpha(i) + "," + curve_beta(i) + " -> " + std::to_string(p),
                                    p == 1 || p == -1});
    }

    // Braid relation for unit pairings, commutation for zero pairings,
    // over all pairs of non-separating named classes.
    for (std::size_t x = 0; x < table.curves.size(); ++x) {
        for (std::size_t y = x + 1; y < table.curves.size(); ++y) {
            const auto& [nx, cx] = table.curves[x];
            const auto& [ny, cy] = table.curves[y];
            if (is_zero_class(cx) || is_zero_class(cy)) continue;
            std::int64_t p = symplectic::pairing(cx, cy, J);
            IntMatrix tx = symplectic::transvection(cx, J);
            IntMatrix ty = symplectic::transvection(cy, J);
            if (p == 0)
                out.push_back(RelationCheck{"commute", nx + "," + ny, tx * ty == ty * tx});
            else if (p == 1 || p == -1)
                out.push_back(RelationCheck{"braid", nx + "," + ny,
                                            tx * ty * tx == ty * tx * ty});
        }
    }

    // Homological shadow of rho_1^3 = twist about the separating s_1: both
    // sides act trivially, so phi(rho_1)^3 must be the identity.
    if (table.gplus1 >= 3 && table.find(curve_alpha(1)) && table.find(curve_beta(1))) {
        IntMatrix r1 = evaluate_word(rho(1, table.gplus1 - 1), table, J);
        out.push_back(RelationCheck{"chain-shadow", "rho1^3 = identity",
                                    r1.pow(3) == IntMatrix::identity(J.mat.dim())});
    }
    return out;
}

}  // namespace twistroot::twistword
