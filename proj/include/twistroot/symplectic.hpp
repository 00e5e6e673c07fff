#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistroot/arith.hpp"

namespace twistroot::symplectic {

/// Dense square integer matrix with exact (overflow-checked) arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int dim) : dim_(validate_dim(dim)), e_(static_cast<std::size_t>(dim) * dim, 0) {}

    static IntMatrix identity(int dim);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int dim() const { return dim_; }

    std::int64_t& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
    std::int64_t at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transposed() const;
    IntMatrix pow(std::uint64_t k) const;

    const std::vector<std::int64_t>& entries() const { return e_; }

private:
    static int validate_dim(int dim);

    int dim_ = 0;
    std::vector<std::int64_t> e_;
};

/// The intersection form: block matrix [[0, I], [-I, 0]] of dimension
/// 2*gplus1, so J^2 = -I and J is antisymmetric.
struct SymplecticForm {
    IntMatrix mat;
    std::int64_t gplus1 = 0;
};

SymplecticForm standard_J(std::int64_t gplus1);

/// Integer homology class in the 2*gplus1-dimensional lattice.
using HomologyClass = std::vector<std::int64_t>;

/// Algebraic intersection number <u, v> = u^T J v.
std::int64_t pairing(const HomologyClass& u, const HomologyClass& v, const SymplecticForm& J);

/// True iff A J A^T = J exactly.
bool is_symplectic(const IntMatrix& A, const SymplecticForm& J);

/// Homology action of the twist about a curve with class c:
///   x |-> x + sign * <x, c> c,
/// as the matrix I + sign * c (J c)^T. The +1 sign is calibrated so that the
/// twist about the first "vertical" basis curve in dimension 4 gives
/// I + E_31; sign -1 is the inverse twist.
IntMatrix transvection(const HomologyClass& c, const SymplecticForm& J, int sign = +1);

/// One matrix entry expressed as a rational linear combination of the free
/// entries (empty form = forced zero).
struct LinearForm {
    std::vector<std::pair<int, arith::Rational>> terms;  // (free slot, coefficient)
};

/// Solved description of {A : AS = SA}: which of the dim^2 entries remain
/// free and how every other entry is determined by them.
struct CentralizerSystem {
    int dim = 0;
    std::vector<int> free_cells;          // flat row-major indices, ascending
    std::vector<LinearForm> cell_forms;   // one per cell; free cells have the single term (slot, 1)
    std::vector<std::string> constraints; // dependent entries, e.g. "a12 = 0", "a11 = a33"
    std::vector<std::string> free_names;  // e.g. "a21"

    bool is_free(int cell) const;
};

/// Exact elimination on the linear system AS - SA = 0 (unknowns ordered
/// row-major, earlier entries become pivots), yielding the forced-zero /
/// forced-equal structure of the centralizer of S.
CentralizerSystem solve_centralizer(const IntMatrix& S);

/// The matrix determined by one value per free cell (in free_cells order).
/// Throws std::domain_error if a dependent entry comes out non-integral.
IntMatrix materialize(const CentralizerSystem& sys, const std::vector<std::int64_t>& free_values);

struct SqrtSearchOptions {
    std::int64_t bound = 3;  // search |entries| <= bound
    int workers = 1;         // 1 = serial reference path; 0 = OpenMP default
};

struct SqrtSearchStats {
    std::uint64_t nodes = 0;       // partial assignments visited
    std::uint64_t candidates = 0;  // complete assignments reaching the final test
};

struct SqrtSearchResult {
    std::optional<IntMatrix> root;  // first root in canonical order, if any
    CentralizerSystem system;
    SqrtSearchStats stats;  // informational; not deterministic when a root is found in parallel
};

/// Exhaustive search for A with AS = SA, |entries| <= bound, A^2 = S and
/// A symplectic. The centralizer constraints are solved first so only the
/// free entries are enumerated; partial products A^2 vs S prune the scan.
///
/// Candidate order is canonical and worker-independent: free entries are
/// enumerated in a fixed order (chosen to make partial-product checks fire
/// early), and each entry ranges over values nearest the identity matrix
/// first (diagonal 1, 0, 2, -1, ...; off-diagonal 0, 1, -1, 2, ...). The
/// returned root is always the first in that order, so searching S^2 recovers
/// S itself and searching the identity recovers the identity.
SqrtSearchResult sqrt_search(const IntMatrix& S, const SymplecticForm& J,
                             const SqrtSearchOptions& options = {});

/// Convenience wrapper returning only the root (absent when none exists
/// within the bound).
std::optional<IntMatrix> centralizer_sqrt_search(const IntMatrix& S, const SymplecticForm& J,
                                                 std::int64_t bound);

enum class DegreeVerdict {
    ObstructedAtHomology,   // even degree: reduces to a square root of S, refuted by search
    NoHomologyObstruction,  // odd degree: no obstruction from this reduction
};

struct EvenDegreeReport {
    DegreeVerdict verdict = DegreeVerdict::NoHomologyObstruction;
    std::string reduction;  // why the even case reduces to the square-root search
};

EvenDegreeReport even_degree_verdict(std::int64_t n);

std::string degree_verdict_name(DegreeVerdict v);

}  // namespace twistroot::symplectic
