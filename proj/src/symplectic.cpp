#include "twistroot/symplectic.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twistroot::symplectic {

using arith::checked_add;
using arith::checked_mul;
using arith::Rational;

int IntMatrix::validate_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("IntMatrix: dimension must be >= 1");
    return dim;
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("IntMatrix: empty row list");
    int dim = static_cast<int>(rows.size());
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(rows[i].size()) != dim)
            throw std::invalid_argument("IntMatrix: rows must form a square matrix");
        for (int j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            std::int64_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < dim_; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, o.at(k, j)));
        }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::pow(std::uint64_t k) const {
    IntMatrix result = identity(dim_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

SymplecticForm standard_J(std::int64_t gplus1) {
    if (gplus1 < 2) throw std::invalid_argument("standard_J: gplus1 must be >= 2");
    int m = static_cast<int>(gplus1);
    IntMatrix j(2 * m);
    for (int i = 0; i < m; ++i) {
        j.at(i, m + i) = 1;
        j.at(m + i, i) = -1;
    }
    return SymplecticForm{std::move(j), gplus1};
}

std::int64_t pairing(const HomologyClass& u, const HomologyClass& v, const SymplecticForm& J) {
    int d = J.mat.dim();
    if (static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d)
        throw std::invalid_argument("pairing: class dimension mismatch");
    std::int64_t acc = 0;
    for (int i = 0; i < d; ++i) {
        if (u[i] == 0) continue;
        std::int64_t row = 0;
        for (int j = 0; j < d; ++j)
            row = checked_add(row, checked_mul(J.mat.at(i, j), v[j]));
        acc = checked_add(acc, checked_mul(u[i], row));
    }
    return acc;
}

bool is_symplectic(const IntMatrix& A, const SymplecticForm& J) {
    if (A.dim() != J.mat.dim()) throw std::invalid_argument("is_symplectic: dimension mismatch");
    return A * J.mat * A.transposed() == J.mat;
}

IntMatrix transvection(const HomologyClass& c, const SymplecticForm& J, int sign) {
    int d = J.mat.dim();
    if (static_cast<int>(c.size()) != d)
        throw std::invalid_argument("transvection: class dimension mismatch");
    if (sign != 1 && sign != -1) throw std::invalid_argument("transvection: sign must be +1 or -1");
    if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; }))
        throw std::invalid_argument("transvection: class must be nonzero");
    // Jc, then I + sign * c (Jc)^T.
    std::vector<std::int64_t> jc(d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            jc[i] = checked_add(jc[i], checked_mul(J.mat.at(i, j), c[j]));
    IntMatrix t = IntMatrix::identity(d);
    for (int i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            t.at(i, j) = checked_add(t.at(i, j), checked_mul(sign, checked_mul(c[i], jc[j])));
    }
    return t;
}

namespace {

std::string cell_name(int cell, int d) {
    int i = cell / d + 1, j = cell % d + 1;
    if (d <= 9) return "a" + std::to_string(i) + std::to_string(j);
    return "a(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string render_form(const LinearForm& form, const std::vector<std::string>& free_names) {
    if (form.terms.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < form.terms.size(); ++t) {
        const auto& [slot, coeff] = form.terms[t];
        Rational mag = coeff < Rational(0) ? -coeff : coeff;
        std::string term = (mag == Rational(1)) ? free_names[slot] : mag.str() + " " + free_names[slot];
        if (t == 0)
            out += (coeff < Rational(0) ? "-" : "") + term;
        else
            out += (coeff < Rational(0) ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace

bool CentralizerSystem::is_free(int cell) const {
    return std::binary_search(free_cells.begin(), free_cells.end(), cell);
}

CentralizerSystem solve_centralizer(const IntMatrix& S) {
    const int d = S.dim();
    const int n2 = d * d;

    // Equations: for each (i,j), sum_k A_ik S_kj - S_ik A_kj = 0, unknowns
    // x_cell with cell = i*d + j ordered row-major.
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<Rational> coef(n2, Rational(0));
            for (int k = 0; k < d; ++k) {
                coef[i * d + k] += Rational(S.at(k, j));
                coef[k * d + j] -= Rational(S.at(i, k));
            }
            if (std::any_of(coef.begin(), coef.end(), [](const Rational& r) { return !r.is_zero(); }))
                rows.push_back(std::move(coef));
        }

    // Reduced row echelon form; pivots land on the earliest unknowns, which
    // therefore get expressed in terms of the later (free) ones.
    std::size_t rank = 0;
    std::vector<int> pivot_cols;
    for (int c = 0; c < n2 && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Rational inv = Rational(1) / rows[rank][c];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Rational f = rows[r][c];
            for (int cc = 0; cc < n2; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    CentralizerSystem sys;
    sys.dim = d;
    std::vector<int> slot_of(n2, -1);
    for (int cell = 0; cell < n2; ++cell) {
        if (!std::binary_search(pivot_cols.begin(), pivot_cols.end(), cell)) {
            slot_of[cell] = static_cast<int>(sys.free_cells.size());
            sys.free_cells.push_back(cell);
            sys.free_names.push_back(cell_name(cell, d));
        }
    }

    sys.cell_forms.resize(n2);
    for (int cell : sys.free_cells)
        sys.cell_forms[cell].terms = {{slot_of[cell], Rational(1)}};
    for (std::size_t r = 0; r < rank; ++r) {
        int cell = pivot_cols[r];
        LinearForm& form = sys.cell_forms[cell];
        for (int c = 0; c < n2; ++c) {
            if (c == cell || rows[r][c].is_zero()) continue;
            form.terms.emplace_back(slot_of[c], -rows[r][c]);
        }
        sys.constraints.push_back(cell_name(cell, d) + " = " + render_form(form, sys.free_names));
    }
    return sys;
}

IntMatrix materialize(const CentralizerSystem& sys, const std::vector<std::int64_t>& free_values) {
    if (free_values.size() != sys.free_cells.size())
        throw std::invalid_argument("materialize: expected one value per free cell");
    const int d = sys.dim;
    std::vector<std::vector<std::int64_t>> rows(d, std::vector<std::int64_t>(d, 0));
    for (int cell = 0; cell < d * d; ++cell) {
        Rational acc(0);
        for (const auto& [slot, coef] : sys.cell_forms[cell].terms)
            acc += coef * Rational(free_values[static_cast<std::size_t>(slot)]);
        if (!acc.is_integer())
            throw std::domain_error("materialize: dependent entry " + cell_name(cell, d) +
                                    " is not integral for this assignment");
        rows[cell / d][cell % d] = acc.numerator();
    }
    return IntMatrix::from_rows(rows);
}

namespace {

/// Value sequence for one matrix entry, nearest the identity's entry first:
/// diagonal cells try 1, 0, 2, -1, 3, ...; off-diagonal 0, 1, -1, 2, -2, ...
/// (sorted by distance from the center, then by absolute value, then
/// positive before negative), restricted to |v| <= bound.
std::vector<std::int64_t> centered_values(std::int64_t center, std::int64_t bound) {
    std::vector<std::int64_t> vals;
    for (std::int64_t v = -bound; v <= bound; ++v) vals.push_back(v);
    std::stable_sort(vals.begin(), vals.end(), [&](std::int64_t a, std::int64_t b) {
        auto key = [&](std::int64_t x) {
            return std::tuple<std::int64_t, std::int64_t, int>(
                x >= center ? x - center : center - x, x >= 0 ? x : -x, x < 0 ? 1 : 0);
        };
        return key(a) < key(b);
    });
    return vals;
}

struct ProductCheck {
    int i = 0, j = 0;
    std::vector<int> ks;  // inner indices whose term can be nonzero
};

/// Static schedule for the square-root scan: which cells materialize and
/// which product checks of A^2 = S fire after each assignment.
struct SearchPlan {
    int d = 0;
    int free_count = 0;
    std::vector<int> order;                          // free slots in assignment order
    std::vector<std::vector<std::int64_t>> values;   // per depth (1-based i-1)
    std::vector<std::vector<int>> cells_at;          // per depth 0..F: cells becoming determined
    std::vector<std::vector<ProductCheck>> checks_at;
};

/// Assignment order for the free entries: repeatedly pick the entry that
/// moves some unfinished product check of A^2 = S closest to completion
/// (then the one completing the most checks, then lowest row-major index).
/// A pure function of the centralizer structure, so the candidate order --
/// and hence the returned root -- is deterministic.
std::vector<int> greedy_entry_order(int free_count,
                                    const std::vector<std::vector<int>>& check_needs) {
    std::vector<int> deficit(check_needs.size());
    std::vector<std::vector<int>> checks_of(free_count);
    for (std::size_t c = 0; c < check_needs.size(); ++c) {
        deficit[c] = static_cast<int>(check_needs[c].size());
        for (int slot : check_needs[c]) checks_of[slot].push_back(static_cast<int>(c));
    }
    std::vector<bool> assigned(free_count, false);
    std::vector<int> order;
    order.reserve(free_count);
    const int kInf = std::numeric_limits<int>::max();
    for (int step = 0; step < free_count; ++step) {
        int best = -1, best_dmin = kInf, best_gain = -1;
        for (int f = 0; f < free_count; ++f) {
            if (assigned[f]) continue;
            int dmin = kInf, gain = 0;
            for (int c : checks_of[f]) {
                if (deficit[c] <= 0) continue;
                dmin = std::min(dmin, deficit[c] - 1);
                if (deficit[c] == 1) ++gain;
            }
            if (best == -1 || dmin < best_dmin || (dmin == best_dmin && gain > best_gain)) {
                best = f;
                best_dmin = dmin;
                best_gain = gain;
            }
        }
        order.push_back(best);
        assigned[best] = true;
        for (int c : checks_of[best])
            if (deficit[c] > 0) --deficit[c];
    }
    return order;
}

SearchPlan build_plan(const CentralizerSystem& sys, std::int64_t bound) {
    const int d = sys.dim;
    const int n2 = d * d;
    const int F = static_cast<int>(sys.free_cells.size());

    // Support of each cell = free slots its value depends on.
    std::vector<std::vector<int>> support(n2);
    for (int cell = 0; cell < n2; ++cell) {
        for (const auto& [slot, coeff] : sys.cell_forms[cell].terms) {
            (void)coeff;
            support[cell].push_back(slot);
        }
        std::sort(support[cell].begin(), support[cell].end());
    }

    // Product checks and the free slots each one needs.
    std::vector<ProductCheck> checks;
    std::vector<std::vector<int>> check_needs;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ProductCheck pc{i, j, {}};
            std::vector<int> needs;
            for (int k = 0; k < d; ++k) {
                if (sys.cell_forms[i * d + k].terms.empty()) continue;  // identically zero
                if (sys.cell_forms[k * d + j].terms.empty()) continue;
                pc.ks.push_back(k);
                needs.insert(needs.end(), support[i * d + k].begin(), support[i * d + k].end());
                needs.insert(needs.end(), support[k * d + j].begin(), support[k * d + j].end());
            }
            std::sort(needs.begin(), needs.end());
            needs.erase(std::unique(needs.begin(), needs.end()), needs.end());
            checks.push_back(std::move(pc));
            check_needs.push_back(std::move(needs));
        }

    SearchPlan plan;
    plan.d = d;
    plan.free_count = F;
    plan.order = greedy_entry_order(F, check_needs);

    std::vector<int> pos(F);
    for (int p = 0; p < F; ++p) pos[plan.order[p]] = p;

    plan.values.resize(F);
    for (int p = 0; p < F; ++p) {
        int cell = sys.free_cells[plan.order[p]];
        std::int64_t center = (cell / d == cell % d) ? 1 : 0;
        plan.values[p] = centered_values(center, bound);
    }

    auto ready_depth_of_cell = [&](int cell) {
        int depth = 0;
        for (int slot : support[cell]) depth = std::max(depth, pos[slot] + 1);
        return depth;
    };

    plan.cells_at.resize(F + 1);
    for (int cell = 0; cell < n2; ++cell) plan.cells_at[ready_depth_of_cell(cell)].push_back(cell);

    plan.checks_at.resize(F + 1);
    for (std::size_t c = 0; c < checks.size(); ++c) {
        int depth = 0;
        for (int slot : check_needs[c]) depth = std::max(depth, pos[slot] + 1);
        plan.checks_at[depth].push_back(std::move(checks[c]));
    }
    return plan;
}

/// One worker's in-chunk state.
struct ChunkScan {
    const IntMatrix* S = nullptr;
    const CentralizerSystem* sys = nullptr;
    const SearchPlan* plan = nullptr;
    std::int64_t bound = 0;
    std::vector<std::int64_t> cell_vals;  // materialized entries of A
    std::vector<std::int64_t> slot_vals;  // assigned free values by slot
    std::uint64_t nodes = 0;
    std::uint64_t candidates = 0;

    // Cooperative cancellation: abort once a lower-indexed chunk has found a
    // root (that root precedes anything this chunk could find).
    const std::atomic<std::uint64_t>* best_chunk = nullptr;
    std::uint64_t my_chunk = 0;

    bool cancelled() const {
        return best_chunk != nullptr &&
               best_chunk->load(std::memory_order_relaxed) < my_chunk;
    }

    /// Evaluates the cells determined at this depth; false = prune (entry
    /// non-integral or out of bound).
    bool materialize(int depth) {
        const int d = plan->d;
        for (int cell : plan->cells_at[depth]) {
            const LinearForm& form = sys->cell_forms[cell];
            Rational acc(0);
            for (const auto& [slot, coeff] : form.terms)
                acc += coeff * Rational(slot_vals[slot]);
            if (!acc.is_integer()) return false;
            std::int64_t v = acc.numerator();
            if (v > bound || v < -bound) return false;
            cell_vals[cell] = v;
        }
        for (const ProductCheck& pc : plan->checks_at[depth]) {
            std::int64_t sum = 0;
            for (int k : pc.ks)
                sum = checked_add(sum, checked_mul(cell_vals[pc.i * d + k], cell_vals[k * d + pc.j]));
            if (sum != S->at(pc.i, pc.j)) return false;
        }
        return true;
    }

    /// Depth-first scan of free entries [depth, F); true when a root was
    /// found (cell_vals then holds it).
    bool scan(int depth, const SymplecticForm& J) {
        if (depth == plan->free_count) {
            ++candidates;
            IntMatrix a(plan->d);
            for (int i = 0; i < plan->d; ++i)
                for (int j = 0; j < plan->d; ++j) a.at(i, j) = cell_vals[i * plan->d + j];
            return is_symplectic(a, J);
        }
        for (std::int64_t v : plan->values[depth]) {
            if (cancelled()) return false;
            ++nodes;
            slot_vals[plan->order[depth]] = v;
            if (!materialize(depth + 1)) continue;
            if (scan(depth + 1, J)) return true;
        }
        return false;
    }
};

int resolve_workers(int workers) {
    if (workers < 0) throw std::invalid_argument("sqrt_search: workers must be >= 0");
#ifdef _OPENMP
    return workers == 0 ? omp_get_max_threads() : workers;
#else
    return 1;
#endif
}

}  // namespace

SqrtSearchResult sqrt_search(const IntMatrix& S, const SymplecticForm& J,
                             const SqrtSearchOptions& options) {
    if (S.dim() != J.mat.dim()) throw std::invalid_argument("sqrt_search: dimension mismatch");
    if (options.bound < 1) throw std::invalid_argument("sqrt_search: bound must be >= 1");
    if (!is_symplectic(S, J)) throw std::invalid_argument("sqrt_search: S must be symplectic");
    int workers = resolve_workers(options.workers);

    SqrtSearchResult result;
    result.system = solve_centralizer(S);
    const SearchPlan plan = build_plan(result.system, options.bound);
    const int F = plan.free_count;

    // Constant part: forced entries and the checks not depending on any free
    // value. A failure here rules out every candidate at once.
    ChunkScan probe;
    probe.S = &S;
    probe.sys = &result.system;
    probe.plan = &plan;
    probe.bound = options.bound;
    probe.cell_vals.assign(static_cast<std::size_t>(plan.d) * plan.d, 0);
    probe.slot_vals.assign(F, 0);
    if (!probe.materialize(0)) return result;
    if (F == 0) {
        // Everything is forced; the lone candidate was materialized above.
        probe.nodes = 1;
        if (probe.scan(0, J)) {
            IntMatrix a(plan.d);
            for (int i = 0; i < plan.d; ++i)
                for (int j = 0; j < plan.d; ++j) a.at(i, j) = probe.cell_vals[i * plan.d + j];
            result.root = std::move(a);
        }
        result.stats.nodes = probe.nodes;
        result.stats.candidates = probe.candidates;
        return result;
    }

    // Split the first few entries' value choices into chunks; chunk index
    // ascending is exactly the canonical candidate order, so the root in the
    // lowest-indexed successful chunk is the global first.
    std::size_t target_chunks = workers == 1 ? 1 : std::min<std::size_t>(
        std::max<std::size_t>(64, 8 * static_cast<std::size_t>(workers)), 4096);
    int q = 0;
    std::size_t chunk_count = 1;
    while (chunk_count < target_chunks && q < F && q < 6) {
        const std::size_t nv = plan.values[q].size();
        if (chunk_count * nv > 8 * target_chunks) break;  // a giant bound would overshoot absurdly
        chunk_count *= nv;
        ++q;
    }

    std::atomic<std::uint64_t> best_chunk{std::numeric_limits<std::uint64_t>::max()};
    std::vector<std::vector<std::int64_t>> found(chunk_count);
    std::vector<std::uint64_t> node_counts(chunk_count, 0), cand_counts(chunk_count, 0);

    // Walk the first q entries once, serially, in canonical (= chunk index)
    // order. This charges prefix nodes exactly as the plain depth-first scan
    // would — a dead prefix is counted once, not once per chunk under it — so
    // exhaustion totals do not depend on the chunking. Chunks whose prefix
    // died are marked so workers skip them.
    std::vector<char> alive(chunk_count, q == 0 ? 1 : 0);
    std::uint64_t prefix_nodes = 0;
    if (q > 0) {
        std::vector<std::size_t> suffix(static_cast<std::size_t>(q) + 1, 1);
        for (int p = q - 1; p >= 0; --p) suffix[p] = suffix[p + 1] * plan.values[p].size();
        ChunkScan walk = probe;
        auto rec = [&](auto&& self, int p, std::size_t base) -> void {
            for (std::size_t rank = 0; rank < plan.values[p].size(); ++rank) {
                ++prefix_nodes;
                walk.slot_vals[plan.order[p]] = plan.values[p][rank];
                const std::size_t ic = base + rank * suffix[p + 1];
                if (!walk.materialize(p + 1)) continue;
                if (p + 1 == q)
                    alive[ic] = 1;
                else
                    self(self, p + 1, ic);
            }
        };
        rec(rec, 0, 0);
    }

    auto run_chunk = [&](std::size_t ic) {
        if (!alive[ic]) return;
        if (best_chunk.load(std::memory_order_relaxed) < ic) return;
        ChunkScan scan_state = probe;  // copies the constant materialization
        scan_state.best_chunk = &best_chunk;
        scan_state.my_chunk = ic;

        // Decode the chunk index into value ranks of the first q entries
        // (first entry most significant) and re-materialize that prefix; the
        // walk above already counted these nodes and proved them viable.
        std::size_t rest = ic;
        for (int p = q - 1; p >= 0; --p) {
            std::size_t nv = plan.values[p].size();
            std::size_t rank = rest % nv;
            rest /= nv;
            scan_state.slot_vals[plan.order[p]] = plan.values[p][rank];
        }
        for (int p = 0; p < q; ++p)
            if (!scan_state.materialize(p + 1)) return;
        if (scan_state.scan(q, J)) {
            found[ic] = scan_state.cell_vals;
            std::uint64_t cur = best_chunk.load();
            while (ic < cur && !best_chunk.compare_exchange_weak(cur, ic)) {
            }
        }
        node_counts[ic] = scan_state.nodes;
        cand_counts[ic] = scan_state.candidates;
    };

#ifdef _OPENMP
    if (workers > 1) {
        #pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (std::int64_t ic = 0; ic < static_cast<std::int64_t>(chunk_count); ++ic)
            run_chunk(static_cast<std::size_t>(ic));
    } else
#endif
    {
        for (std::size_t ic = 0; ic < chunk_count; ++ic) {
            run_chunk(ic);
            if (!found[ic].empty()) break;  // later chunks cannot precede it
        }
    }

    result.stats.nodes = prefix_nodes;
    for (std::size_t ic = 0; ic < chunk_count; ++ic) {
        result.stats.nodes += node_counts[ic];
        result.stats.candidates += cand_counts[ic];
        if (!result.root && !found[ic].empty()) {
            IntMatrix a(plan.d);
            for (int i = 0; i < plan.d; ++i)
                for (int j = 0; j < plan.d; ++j) a.at(i, j) = found[ic][i * plan.d + j];
            result.root = std::move(a);
        }
    }
    return result;
}

std::optional<IntMatrix> centralizer_sqrt_search(const IntMatrix& S, const SymplecticForm& J,
                                                 std::int64_t bound) {
    return sqrt_search(S, J, SqrtSearchOptions{bound, 1}).root;
}

EvenDegreeReport even_degree_verdict(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("even_degree_verdict: degree must be >= 2");
    if (n % 2 != 0)
        return EvenDegreeReport{DegreeVerdict::NoHomologyObstruction,
                                "odd degree: no reduction to a square root of the twist action"};
    return EvenDegreeReport{
        DegreeVerdict::ObstructedAtHomology,
        "a degree-" + std::to_string(n) + " root h of the twist gives B = homology action of h^" +
            std::to_string(n / 2) +
            " with B^2 = S (the twist transvection); the bounded centralizer search refutes such B"};
}

std::string degree_verdict_name(DegreeVerdict v) {
    switch (v) {
        case DegreeVerdict::ObstructedAtHomology: return "ObstructedAtHomology";
        case DegreeVerdict::NoHomologyObstruction: return "NoHomologyObstruction";
    }
    return "unknown";
}

}  // namespace twistroot::symplectic
