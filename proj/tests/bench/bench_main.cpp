// Timing harness (not a test): compares the brute-force reference
// implementations against the library kernels, and the kernels against
// themselves across worker counts. Numbers are wall-clock seconds on the
// current machine; on a single-core host the multi-worker rows show
// scheduling overhead only.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "naive_oracle.hpp"
#include "twistroot/enumeration.hpp"
#include "twistroot/symplectic.hpp"

using namespace twistroot;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

enumeration::EnumerationOptions opts(int workers) {
    enumeration::EnumerationOptions o;
    o.workers = workers;
    return o;
}

void row(const char* label, double reference, double measured, std::int64_t checksum) {
    if (reference > 0)
        std::printf("  %-34s %8.3fs   (%.2fx vs reference)   [checksum %lld]\n", label, measured,
                    reference / measured, (long long)checksum);
    else
        std::printf("  %-34s %8.3fs   [checksum %lld]\n", label, measured, (long long)checksum);
}

std::int64_t spectrum_checksum(std::int64_t g, int workers) {
    std::int64_t sum = 0;
    for (const auto& e : enumeration::degree_spectrum(g, opts(workers)).entries)
        sum += e.n * 1000003 + e.count;
    return sum;
}

}  // namespace

int main(int argc, char** argv) {
    // optional scale factor: bench [genus_for_sweep] (default 60)
    const std::int64_t big_g = argc > 1 ? std::atoll(argv[1]) : 60;

#ifdef _OPENMP
    const int hw = omp_get_max_threads();
#else
    const int hw = 1;
#endif
    std::printf("hardware worker count: %d\n\n", hw);

    std::printf("enumeration, full grid g<=8 (both conventions):\n");
    {
        auto t0 = Clock::now();
        std::int64_t check = 0;
        for (std::int64_t g = 1; g <= 8; ++g)
            for (std::int64_t n = 2; n <= 2 * g + 1; ++n)
                for (auto conv :
                     {nielsen::BoundaryConvention::Unordered, nielsen::BoundaryConvention::Ordered})
                    check += (std::int64_t)oracle::enumerate_naive(g, n, conv).size();
        const double oracle_t = secs(t0);
        row("brute-force oracle", 0.0, oracle_t, check);

        for (int workers : {1, 2, hw}) {
            t0 = Clock::now();
            check = 0;
            for (std::int64_t g = 1; g <= 8; ++g)
                for (std::int64_t n = 2; n <= 2 * g + 1; ++n)
                    for (auto conv : {nielsen::BoundaryConvention::Unordered,
                                      nielsen::BoundaryConvention::Ordered}) {
                        enumeration::EnumerationOptions o;
                        o.convention = conv;
                        o.workers = workers;
                        check += (std::int64_t)enumeration::enumerate_datasets(g, n, o).size();
                    }
            char label[64];
            std::snprintf(label, sizeof label, "kernel, %d worker(s)", workers);
            row(label, oracle_t, secs(t0), check);
        }
    }

    std::printf("\ndegree spectrum, genus %lld:\n", (long long)big_g);
    {
        auto t0 = Clock::now();
        std::int64_t check = spectrum_checksum(big_g, 1);
        const double serial = secs(t0);
        row("kernel, 1 worker", 0.0, serial, check);
        for (int workers : {2, hw}) {
            t0 = Clock::now();
            check = spectrum_checksum(big_g, workers);
            char label[64];
            std::snprintf(label, sizeof label, "kernel, %d worker(s)", workers);
            row(label, serial, secs(t0), check);
        }
    }

    std::printf("\nsquare-root search, dim 4, bound 2 (twist: no root exists):\n");
    {
        const auto J = symplectic::standard_J(2);
        symplectic::HomologyClass c{0, 0, 1, 0};
        const auto S = symplectic::transvection(c, J);

        auto t0 = Clock::now();
        auto raw = oracle::raw_sqrt_search(S, J, 2);
        const double oracle_t = secs(t0);
        row("raw-grid oracle (16 entries)", 0.0, oracle_t, (std::int64_t)raw.nodes);

        for (int workers : {1, hw}) {
            symplectic::SqrtSearchOptions o;
            o.bound = 2;
            o.workers = workers;
            t0 = Clock::now();
            auto r = symplectic::sqrt_search(S, J, o);
            char label[64];
            std::snprintf(label, sizeof label, "centralizer kernel, %d worker(s)", workers);
            row(label, oracle_t, secs(t0), (std::int64_t)r.stats.nodes);
        }
    }

    std::printf("\nsquare-root search, dim 6, bound 1 (twist: no root exists):\n");
    {
        const auto J = symplectic::standard_J(3);
        symplectic::HomologyClass c(6, 0);
        c[3] = 1;
        const auto S = symplectic::transvection(c, J);
        double serial = 0.0;
        for (int workers : {1, 2, hw}) {
            symplectic::SqrtSearchOptions o;
            o.bound = 1;
            o.workers = workers;
            auto t0 = Clock::now();
            auto r = symplectic::sqrt_search(S, J, o);
            const double dt = secs(t0);
            if (workers == 1) serial = dt;
            char label[64];
            std::snprintf(label, sizeof label, "centralizer kernel, %d worker(s)", workers);
            row(label, workers == 1 ? 0.0 : serial, dt, (std::int64_t)r.stats.nodes);
        }
    }
    return 0;
}
