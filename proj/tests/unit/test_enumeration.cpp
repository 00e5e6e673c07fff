#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "naive_oracle.hpp"
#include "twistroot/enumeration.hpp"
#include "twistroot/io.hpp"

using namespace twistroot;
using enumeration::EnumerationOptions;
using nielsen::BoundaryConvention;

namespace {

EnumerationOptions opts(BoundaryConvention c, int workers = 1) {
    EnumerationOptions o;
    o.convention = c;
    o.workers = workers;
    return o;
}

std::map<std::int64_t, std::int64_t> spectrum_map(std::int64_t g, BoundaryConvention c) {
    std::map<std::int64_t, std::int64_t> m;
    for (const auto& e : enumeration::degree_spectrum(g, opts(c)).entries) m[e.n] = e.count;
    return m;
}

}  // namespace

TEST_CASE("genus 2 degree 5: the two known classes") {
    auto v = enumeration::enumerate_datasets(2, 5, opts(BoundaryConvention::Unordered));
    REQUIRE(v.size() == 2);
    CHECK(io::dataset_brief(v[0]) == "[5, 0, (1,2); (2,5)]");
    CHECK(io::dataset_brief(v[1]) == "[5, 0, (3,3); (4,5)]");

    auto w = enumeration::enumerate_datasets(2, 5, opts(BoundaryConvention::Ordered));
    CHECK(w.size() == 3);  // (1,2) and (2,1) count separately

    auto u = enumeration::enumerate_datasets(2, 3, opts(BoundaryConvention::Unordered));
    REQUIRE(u.size() == 1);
    CHECK(io::dataset_brief(u[0]) == "[3, 0, (1,1); (2,3), (2,3)]");
}

TEST_CASE("every enumerated data set is valid for its genus") {
    for (std::int64_t g = 1; g <= 6; ++g)
        for (std::int64_t n = 3; n <= 2 * g + 1; n += 2)
            for (auto conv : {BoundaryConvention::Unordered, BoundaryConvention::Ordered})
                for (const auto& d : enumeration::enumerate_datasets(g, n, opts(conv))) {
                    REQUIRE(nielsen::validate_dataset(d, g).valid);
                    REQUIRE(nielsen::genus_of(d) == g);
                    REQUIRE(d == nielsen::canonical_form(d, conv));
                }
}

TEST_CASE("even degrees admit no roots") {
    for (std::int64_t g = 1; g <= 10; ++g)
        for (std::int64_t n = 2; n <= 2 * g + 1; n += 2) {
            CAPTURE(g);
            CAPTURE(n);
            CHECK(enumeration::enumerate_datasets(g, n, opts(BoundaryConvention::Ordered)).empty());
            CHECK(!enumeration::exists_root(g, n, opts(BoundaryConvention::Ordered)));
        }
}

TEST_CASE("degree spectra for genus 1..10") {
    using M = std::map<std::int64_t, std::int64_t>;
    const std::vector<M> unordered = {
        {{3, 1}},
        {{3, 1}, {5, 2}},
        {{3, 1}, {7, 3}},
        {{3, 3}, {5, 4}, {9, 2}},
        {{3, 3}, {11, 5}},
        {{3, 3}, {5, 8}, {7, 9}, {13, 6}},
        {{3, 6}, {5, 2}, {9, 4}, {15, 2}},
        {{3, 6}, {5, 14}, {9, 4}, {17, 8}},
        {{3, 6}, {5, 4}, {7, 24}, {19, 9}},
        {{3, 10}, {5, 22}, {7, 3}, {9, 6}, {11, 25}, {21, 3}},
    };
    const std::vector<M> ordered = {
        {{3, 1}},
        {{3, 1}, {5, 3}},
        {{3, 1}, {7, 5}},
        {{3, 3}, {5, 6}, {9, 3}},
        {{3, 3}, {11, 9}},
        {{3, 3}, {5, 12}, {7, 15}, {13, 11}},
        {{3, 6}, {5, 3}, {9, 6}, {15, 3}},
        {{3, 6}, {5, 21}, {9, 6}, {17, 15}},
        {{3, 6}, {5, 6}, {7, 40}, {19, 17}},
        {{3, 10}, {5, 33}, {7, 5}, {9, 9}, {11, 45}, {21, 5}},
    };
    for (std::int64_t g = 1; g <= 10; ++g) {
        CAPTURE(g);
        CHECK(spectrum_map(g, BoundaryConvention::Unordered) == unordered[g - 1]);
        CHECK(spectrum_map(g, BoundaryConvention::Ordered) == ordered[g - 1]);
    }
}

TEST_CASE("spectrum degrees are odd, bounded, and bracketed") {
    for (std::int64_t g = 1; g <= 10; ++g) {
        auto m = spectrum_map(g, BoundaryConvention::Unordered);
        REQUIRE(m.count(3) == 1);
        REQUIRE(m.count(2 * g + 1) == 1);
        for (const auto& [n, count] : m) {
            REQUIRE(n % 2 == 1);
            REQUIRE(n >= 3);
            REQUIRE(n <= 2 * g + 1);
            REQUIRE(count > 0);
        }
    }
}

TEST_CASE("library enumeration matches the brute-force oracle") {
    for (std::int64_t g = 1; g <= 6; ++g)
        for (std::int64_t n = 2; n <= 2 * g + 1; ++n)
            for (auto conv : {BoundaryConvention::Unordered, BoundaryConvention::Ordered}) {
                CAPTURE(g);
                CAPTURE(n);
                auto lib = enumeration::enumerate_datasets(g, n, opts(conv));
                auto ora = oracle::enumerate_naive(g, n, conv);
                REQUIRE(lib == ora);
            }
}

TEST_CASE("oracle spectra for genus 3 and 4") {
    auto s3 = oracle::spectrum_naive(3, BoundaryConvention::Unordered);
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].first == 3);
    CHECK(s3[1].first == 7);
    auto s4 = oracle::spectrum_naive(4, BoundaryConvention::Unordered);
    REQUIRE(s4.size() == 3);
    CHECK(s4[0].first == 3);
    CHECK(s4[1].first == 5);
    CHECK(s4[2].first == 9);
}

TEST_CASE("enumeration output is identical across worker counts") {
    for (std::int64_t g : {4, 7, 10}) {
        for (auto conv : {BoundaryConvention::Unordered, BoundaryConvention::Ordered}) {
            auto one = enumeration::enumerate_datasets(g, 2 * g + 1, opts(conv, 1));
            auto two = enumeration::enumerate_datasets(g, 2 * g + 1, opts(conv, 2));
            auto eight = enumeration::enumerate_datasets(g, 2 * g + 1, opts(conv, 8));
            REQUIRE(one == two);
            REQUIRE(one == eight);

            // byte-level: the serialized spectra agree too
            std::string s1, s2, s8;
            for (int workers : {1, 2, 8}) {
                auto rep = enumeration::degree_spectrum(g, opts(conv, workers));
                auto& dst = workers == 1 ? s1 : (workers == 2 ? s2 : s8);
                dst = io::to_json(rep).dump();
            }
            REQUIRE(s1 == s2);
            REQUIRE(s1 == s8);
        }
    }
}

TEST_CASE("exists_root probes without materializing counts") {
    CHECK(enumeration::exists_root(2, 5, opts(BoundaryConvention::Unordered)));
    CHECK(enumeration::exists_root(6, 5, opts(BoundaryConvention::Unordered)));
    CHECK(!enumeration::exists_root(2, 7, opts(BoundaryConvention::Unordered)));
    CHECK(!enumeration::exists_root(3, 5, opts(BoundaryConvention::Unordered)));
    CHECK(!enumeration::exists_root(1, 4, opts(BoundaryConvention::Unordered)));
}

TEST_CASE("enumerate rejects out-of-domain queries") {
    CHECK_THROWS(enumeration::enumerate_datasets(0, 3, opts(BoundaryConvention::Unordered)));
    CHECK_THROWS(enumeration::enumerate_datasets(2, 1, opts(BoundaryConvention::Unordered)));
    CHECK_THROWS(enumeration::degree_spectrum(0, opts(BoundaryConvention::Unordered)));
}

TEST_CASE("marked-surface obstruction rules") {
    using enumeration::MarkedVerdict;
    auto names = [](std::int64_t g, std::int64_t b1, std::int64_t b2, std::int64_t p) {
        std::vector<std::string> out;
        for (auto v :
             enumeration::marked_obstructions(enumeration::MarkedSurfaceQuery::make(g, b1, b2, p)))
            out.push_back(enumeration::marked_verdict_name(v));
        return out;
    };

    // documented examples
    auto a = names(1, 0, 0, 2);
    REQUIRE(!a.empty());
    CHECK(a.front() == "NoRootsAtAll");
    auto b = names(2, 0, 1, 0);
    REQUIRE(!b.empty());
    CHECK(b.front() == "NoRoots");

    // rules fire exactly where their formulas say, over the whole grid
    for (std::int64_t g = 1; g <= 4; ++g)
        for (std::int64_t b1 = 0; b1 <= 8; ++b1)
            for (std::int64_t b2 = 0; b2 <= 2; ++b2)
                for (std::int64_t p = 0; p <= 8; ++p) {
                    CAPTURE(g);
                    CAPTURE(b1);
                    CAPTURE(b2);
                    CAPTURE(p);
                    auto got = names(g, b1, b2, p);
                    const bool no_roots = b2 > 0;
                    const bool no_roots_at_all = !no_roots && g == 1 && (b1 + p) % 3 == 2;
                    const bool no_degree_max = !no_roots && (b1 + p) % (2 * g + 1) > 1;
                    std::vector<std::string> want;
                    if (no_roots) want.push_back("NoRoots");
                    if (no_roots_at_all) want.push_back("NoRootsAtAll");
                    if (no_degree_max) want.push_back("NoDegreeMax");
                    if (want.empty()) want.push_back("NoObstructionFound");
                    REQUIRE(got == want);
                }
}

TEST_CASE("marked queries validate their arguments") {
    CHECK_THROWS(enumeration::MarkedSurfaceQuery::make(0, 0, 0, 0));
    CHECK_THROWS(enumeration::MarkedSurfaceQuery::make(1, -1, 0, 0));
    CHECK_THROWS(enumeration::MarkedSurfaceQuery::make(1, 0, -1, 0));
    CHECK_THROWS(enumeration::MarkedSurfaceQuery::make(1, 0, 0, -1));
}
