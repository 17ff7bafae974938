#include <doctest.h>

#include <random>

#include "latpos/catalog.hpp"
#include "latpos/seqprops.hpp"

using namespace latpos;

namespace {

PolySequence seq(std::vector<long> v) {
    PolySequence s;
    for (long x : v) s.terms.emplace_back(x);
    return s;
}

} // namespace

TEST_CASE("extraction from truncations") {
    auto [pascal, _] = catalog_scheme("pascal_triangle");
    TriangleTruncation tri = build_matrix_rec1(pascal, 8, 8);

    PolySequence row3 = extract(tri, Extraction::row(3), 4);
    CHECK(row3.terms == std::vector<MultiPoly>{MultiPoly(1), MultiPoly(3), MultiPoly(3),
                                               MultiPoly(1)});

    auto [deltri, _o] = catalog_scheme("delannoy_triangle");
    TriangleTruncation dt = build_matrix_rec1(deltri, 8, 8);
    PolySequence col1 = extract(dt, Extraction::column(1), 5);
    CHECK(col1.terms == std::vector<MultiPoly>{MultiPoly(0), MultiPoly(1), MultiPoly(3),
                                               MultiPoly(5), MultiPoly(7)});

    PolySequence diag = extract(tri, Extraction::diagonal(1, 0, 1, 2), 3);
    CHECK(diag.terms == std::vector<MultiPoly>{MultiPoly(1), MultiPoly(1), MultiPoly(0)});

    CHECK_THROWS_AS(extract(tri, Extraction::row(3), 100), Error);
    CHECK_THROWS_AS(extract(tri, Extraction::diagonal(1, 0, 2, 2), 2), Error);
}

TEST_CASE("iterated square-difference operator") {
    PolySequence s = seq({1, 3, 3, 1});
    PolySequence l = L_operator(s);
    CHECK(l.terms == seq({1, 6, 6, 1}).terms);

    CHECK(L_operator(seq({1})).terms == seq({1}).terms);
    CHECK(L_operator(seq({0, 0, 0})).terms == seq({0, 0, 0}).terms);
}

TEST_CASE("log-concavity depth") {
    CHECK(is_r_log_concave(seq({1, 3, 3, 1}), 3).passed);
    auto bad = is_r_log_concave(seq({1, 1, 2}), 1);
    CHECK_FALSE(bad.passed);
    CHECK(bad.failed_iteration == 1);
    CHECK(is_r_log_concave(seq({5}), 10).passed);

    PolySequence sym;
    sym.terms.push_back(MultiPoly::var("x"));
    CHECK_THROWS_AS(is_r_log_concave(sym, 1), Error);
}

TEST_CASE("window total positivity of sequences") {
    CHECK(is_polya_frequency_finite(seq({1, 2, 1}), 4, 3).passed);

    TPReport r1 = is_polya_frequency_finite(seq({1, 0, 1}), 3, 2);
    CHECK_FALSE(r1.passed);
    CHECK(*r1.witness_value == MultiPoly(-1));

    TPReport r2 = is_polya_frequency_finite(seq({1, 1, 1}), 4, 3);
    CHECK_FALSE(r2.passed);
    CHECK(r2.witness_minor->rows.size() == 3);
    CHECK(*r2.witness_value == MultiPoly(-1));
}

TEST_CASE("exact real-root route") {
    CHECK(pf_via_real_roots(seq({1, 2, 1})));
    CHECK_FALSE(pf_via_real_roots(seq({1, 1, 1})));
    CHECK(pf_via_real_roots(seq({0, 1})));
    CHECK(pf_via_real_roots(seq({2, 3})));
    CHECK(pf_via_real_roots(seq({6, 5, 1})));      // (2+z)(3+z)
    CHECK_FALSE(pf_via_real_roots(seq({1, 0, 1}))); // roots +-i
    CHECK_FALSE(pf_via_real_roots(seq({-1, -2, -1}))); // negative entries
    CHECK(pf_via_real_roots(seq({1, 4, 6, 4, 1}))); // (1+z)^4, repeated roots
    CHECK_FALSE(pf_via_real_roots(seq({1, 0, 0, 0, 1})));
    CHECK_THROWS_AS(pf_via_real_roots(seq({0, 0})), Error);
}

TEST_CASE("window route agrees with the root route") {
    // real-rooted: every window is totally positive at every order;
    // not real-rooted: an explicit negative Toeplitz minor must exist
    std::mt19937_64 rng(42);
    int tested = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int len = 2 + static_cast<int>(rng() % 5);
        std::vector<long> v;
        bool allzero = true;
        for (int i = 0; i < len; ++i) {
            long x = static_cast<long>(rng() % 5);
            if (rng() % 4 == 0) x = -x;
            allzero = allzero && x == 0;
            v.push_back(x);
        }
        if (allzero) continue;
        PolySequence s = seq(v);
        if (pf_via_real_roots(s)) {
            CHECK(is_polya_frequency_finite(s, len + 2, 4).passed);
        } else {
            auto w = find_negative_toeplitz_minor(s, 2 * len + 4);
            REQUIRE(w.has_value());
            // the witness really is a negative minor of the window
            TPReport rep = is_polya_frequency_finite(s, w->window, static_cast<int>(w->spec.rows.size()));
            CHECK_FALSE(rep.passed);
            CHECK(minor_det(toeplitz(s.terms, w->window), w->spec) == w->value);
        }
        ++tested;
    }
    CHECK(tested >= 150);
}

TEST_CASE("a near-real-rooted sequence needs a deep witness") {
    PolySequence s = seq({1, 3, 3});
    CHECK_FALSE(pf_via_real_roots(s));
    CHECK(is_polya_frequency_finite(s, 5, 4).passed); // small budgets cannot tell
    auto w = find_negative_toeplitz_minor(s, 10);
    REQUIRE(w.has_value());
    CHECK(w->spec.rows.size() == 6);
    CHECK(w->value == MultiPoly(-27));
}

TEST_CASE("window positivity implies first-order log-concavity") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        int len = 3 + static_cast<int>(rng() % 4);
        std::vector<long> v;
        for (int i = 0; i < len; ++i) v.push_back(static_cast<long>(rng() % 6));
        PolySequence s = seq(v);
        if (!is_polya_frequency_finite(s, len + 2, 4).passed) continue;
        CHECK(is_r_log_concave(s, 1).passed);
    }
}

TEST_CASE("orthogonal-polynomial triangles have real-rooted rows") {
    for (const char* name : {"stirling1", "legendre_stirling1"}) {
        auto [s, _] = catalog_scheme(name);
        TriangleTruncation tri = build_matrix_rec1(s, 6, 6);
        for (int n = 1; n <= 6; ++n) {
            PolySequence row = extract(tri, Extraction::row(n), 7);
            CHECK(pf_via_real_roots(row));
            CHECK(is_polya_frequency_finite(row, 7, 4).passed);
        }
    }
    auto [jc, _] = catalog_scheme("jacobi_stirling1", {{"z", "2"}});
    TriangleTruncation tri = build_matrix_rec1(jc, 6, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(pf_via_real_roots(extract(tri, Extraction::row(n), 7)));
}

TEST_CASE("hypothesis-checked positivity report") {
    // band (1+z)^1 at gamma = 1: the Delannoy triangle
    ConstantScheme cs = ConstantScheme::from_factors(1, {MultiPoly(1)}, {MultiPoly(1)},
                                                     MultiPoly(1));
    Prop19Report rep = check_prop_1_9(cs, 5, 3, 3);
    CHECK(rep.passed);

    ConstantScheme dh = ConstantScheme::from_factors(1, {MultiPoly(3)}, {MultiPoly(1)},
                                                     MultiPoly(2)); // D(e=2, h=3)
    CHECK(check_prop_1_9(dh, 5, 3, 3).passed);

    // complex-rooted band is rejected up front
    ConstantScheme bad;
    bad.t = 1;
    bad.ell = 2;
    bad.a = {MultiPoly(1), MultiPoly(0), MultiPoly(1)};
    bad.gamma = MultiPoly(1);
    CHECK_THROWS_AS(check_prop_1_9(bad, 4, 3, 2), Error);
}

TEST_CASE("sequence report serialization") {
    PolySequence s = seq({1, 3, 3, 1});
    s.origin = "row 3";
    std::string j = sequence_report_json(s, 6, 3, 3);
    CHECK(j.find("\"pf\":true") != std::string::npos);
    CHECK(j.find("\"origin\":\"row 3\"") != std::string::npos);
    CHECK(j.find("\"log_concavity_depth\":3") != std::string::npos);
}
