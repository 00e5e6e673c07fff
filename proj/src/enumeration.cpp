#include "twistroot/enumeration.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twistroot::enumeration {

using nielsen::BoundaryConvention;
using nielsen::BoundaryPair;
using nielsen::DataSet;
using nielsen::OrbitEntry;

namespace {

/// Orbit weight: each orbit of multiplicity lambda contributes
/// (n/lambda)(lambda - 1) = n - n/lambda to 2g - 2 g' n.
std::int64_t orbit_weight(std::int64_t n, std::int64_t lambda) {
    return n - n / lambda;
}

void multisets_rec(const std::vector<std::int64_t>& lambdas, std::size_t from,
                   std::int64_t n, std::int64_t remaining, std::vector<std::int64_t>& cur,
                   std::vector<std::vector<std::int64_t>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < lambdas.size(); ++i) {
        std::int64_t w = orbit_weight(n, lambdas[i]);
        if (w > remaining) break;  // weights ascend with lambda
        cur.push_back(lambdas[i]);
        multisets_rec(lambdas, i, n, remaining - w, cur, out);
        cur.pop_back();
    }
}

/// Coprime residues 1 <= sigma < lambda.
std::vector<std::int64_t> coprime_residues(std::int64_t lambda) {
    std::vector<std::int64_t> out;
    for (std::int64_t s = 1; s < lambda; ++s)
        if (arith::gcd(s, lambda) == 1) out.push_back(s);
    return out;
}

int resolve_workers(int workers) {
    if (workers < 0) throw std::invalid_argument("workers must be >= 0");
#ifdef _OPENMP
    return workers == 0 ? omp_get_max_threads() : workers;
#else
    return 1;
#endif
}

/// Runs fn(0..count-1); task order is unspecified across threads, so callers
/// must write results into per-index slots and merge deterministically.
void run_tasks(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    int resolved = resolve_workers(workers);
#ifdef _OPENMP
    if (resolved > 1) {
        #pragma omp parallel for schedule(dynamic) num_threads(resolved)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)resolved;
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

struct Task {
    std::int64_t gprime;
    std::vector<std::int64_t> lambdas;  // ascending multiset
};

/// Enumerates the canonical sigma assignments for one (g', lambda-multiset)
/// task: within each run of equal lambdas the sigmas are chosen nondecreasing,
/// so every emitted data set is already in canonical form and no two tasks
/// can emit the same one.
void emit_for_task(std::int64_t g, std::int64_t n, const Task& task,
                   const std::vector<BoundaryPair>& pairs, std::vector<DataSet>& out) {
    (void)g;
    const auto& lambdas = task.lambdas;
    std::vector<OrbitEntry> orbits(lambdas.size());
    std::vector<std::vector<std::int64_t>> residues(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) residues[i] = coprime_residues(lambdas[i]);

    // rec(i, acc): positions before i are assigned; acc is their weighted
    // sigma sum mod n.
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t acc) {
        if (i == lambdas.size()) {
            for (const BoundaryPair& bp : pairs) {
                if ((acc + bp.sigma0 + bp.sigma1) % n != 0) continue;
                out.push_back(DataSet{n, task.gprime, bp, orbits});
            }
            return;
        }
        std::int64_t mult = n / lambdas[i];
        for (std::int64_t s : residues[i]) {
            // Keep sigmas nondecreasing across a run of equal lambdas.
            if (i > 0 && lambdas[i] == lambdas[i - 1] && s < orbits[i - 1].sigma) continue;
            orbits[i] = OrbitEntry{s, lambdas[i]};
            rec(i + 1, (acc + s * mult) % n);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<std::vector<std::int64_t>> orbit_multisets(std::int64_t g, std::int64_t n,
                                                       std::int64_t gprime) {
    if (g < 1) throw std::invalid_argument("orbit_multisets: genus must be >= 1");
    if (n < 1) throw std::invalid_argument("orbit_multisets: degree must be >= 1");
    if (gprime < 0) throw std::invalid_argument("orbit_multisets: quotient genus must be >= 0");
    std::vector<std::vector<std::int64_t>> out;
    std::int64_t target = 2 * g - 2 * gprime * n;
    if (target < 0) return out;
    std::vector<std::int64_t> lambdas;
    for (std::int64_t d : arith::divisors(n))
        if (d > 1) lambdas.push_back(d);
    std::vector<std::int64_t> cur;
    multisets_rec(lambdas, 0, n, target, cur, out);
    return out;
}

std::vector<DataSet> enumerate_datasets(std::int64_t g, std::int64_t n,
                                        const EnumerationOptions& options) {
    if (g < 1) throw std::invalid_argument("enumerate_datasets: genus must be >= 1");
    if (n < 2) throw std::invalid_argument("enumerate_datasets: degree must be >= 2");

    std::vector<BoundaryPair> pairs = nielsen::boundary_pairs(n, options.convention);
    if (pairs.empty()) return {};

    std::vector<Task> tasks;
    for (std::int64_t gp = g / n; gp >= 0; --gp)
        for (auto& ms : orbit_multisets(g, n, gp)) tasks.push_back(Task{gp, std::move(ms)});

    std::vector<std::vector<DataSet>> buckets(tasks.size());
    run_tasks(tasks.size(), options.workers, [&](std::size_t ti) {
        emit_for_task(g, n, tasks[ti], pairs, buckets[ti]);
    });

    std::vector<DataSet> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool exists_root(std::int64_t g, std::int64_t n, const EnumerationOptions& options) {
    return !enumerate_datasets(g, n, options).empty();
}

SpectrumReport degree_spectrum(std::int64_t g, const EnumerationOptions& options) {
    if (g < 1) throw std::invalid_argument("degree_spectrum: genus must be >= 1");
    SpectrumReport report;
    report.g = g;
    // The degree of any root is odd and at most 2g+1, so the scan is finite.
    for (std::int64_t n = 3; n <= 2 * g + 1; n += 2) {
        auto classes = enumerate_datasets(g, n, options);
        if (!classes.empty())
            report.entries.push_back(SpectrumEntry{n, static_cast<std::int64_t>(classes.size())});
    }
    return report;
}

MarkedSurfaceQuery MarkedSurfaceQuery::make(std::int64_t g, std::int64_t b1, std::int64_t b2,
                                            std::int64_t p) {
    if (g < 1) throw std::invalid_argument("MarkedSurfaceQuery: genus must be >= 1");
    if (b1 < 0 || b2 < 0 || p < 0)
        throw std::invalid_argument("MarkedSurfaceQuery: boundary/puncture counts must be >= 0");
    return MarkedSurfaceQuery{g, b1, b2, p};
}

std::string marked_verdict_name(MarkedVerdict v) {
    switch (v) {
        case MarkedVerdict::NoRoots: return "NoRoots";
        case MarkedVerdict::NoRootsAtAll: return "NoRootsAtAll";
        case MarkedVerdict::NoDegreeMax: return "NoDegreeMax";
        case MarkedVerdict::NoObstructionFound: return "NoObstructionFound";
    }
    return "unknown";
}

std::vector<MarkedVerdict> marked_obstructions(const MarkedSurfaceQuery& q) {
    MarkedSurfaceQuery::make(q.g, q.b1, q.b2, q.p);  // validate
    std::vector<MarkedVerdict> out;
    if (q.b2 > 0) {
        // A nontrivial root would have to rotate the pointwise-fixed
        // boundary circles, so none exists.
        out.push_back(MarkedVerdict::NoRoots);
    } else {
        std::int64_t marks = q.b1 + q.p;
        if (q.g == 1 && marks % 3 == 2) out.push_back(MarkedVerdict::NoRootsAtAll);
        // Degree 2g+1 forces all marks into free orbits of the full degree
        // except for at most one fixed mark.
        std::int64_t r = marks % (2 * q.g + 1);
        if (r > 1) out.push_back(MarkedVerdict::NoDegreeMax);
    }
    if (out.empty()) out.push_back(MarkedVerdict::NoObstructionFound);
    return out;
}

}  // namespace twistroot::enumeration
