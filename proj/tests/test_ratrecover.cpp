#include <catch2/catch_amalgamated.hpp>

#include "etamod/ratrecover.hpp"
#include "etamod/reference_tables.hpp"

using namespace etamod;

namespace {

const RecoveryWorkspace& workspace(long N, long prec) {
    static std::map<std::pair<long, long>, RecoveryWorkspace> cache;
    auto key = std::make_pair(N, prec);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, make_workspace(solve_record(N), prec)).first;
    return it->second;
}

}  // namespace

TEST_CASE("workspace inverts the Hauptmodul series") {
    const RecoveryWorkspace& ws = workspace(2, 24);
    CHECK(ws.h.offset() == -1);
    CHECK(ws.hInv.offset() == 1);
    TruncatedSeries round = series_compose(ws.hInv, ws.qOfH);
    CHECK(series_agree(round, TruncatedSeries::monomial(Rational(1), round.prec())));
}

TEST_CASE("polynomial evaluation at a series") {
    const RecoveryWorkspace& ws = workspace(2, 10);
    // h^2 - 3 evaluated termwise.
    TruncatedSeries direct = ws.h * ws.h - TruncatedSeries::constant(Rational(3), 10);
    CHECK(series_agree(poly_eval_series(IntPolynomial{-3, 0, 1}, ws.h, 10), direct));
}

TEST_CASE("j recovery at level 2 matches the published expression") {
    const RecoveryWorkspace& ws = workspace(2, 24);
    TruncatedSeries j = j_series(24);
    RationalFunction f = express_in_hauptmodul(j, ws, 3);
    RationalFunction expected(reference::P({1, 256}).pow(3), reference::P({1, 0}).pow(2));
    CHECK(f == expected);
    // Adaptive search finds the same function.
    CHECK(express_in_hauptmodul(j, ws) == expected);
}

TEST_CASE("j recovery at levels 3..5 matches the published expressions") {
    for (const auto& row : reference::jmap_table()) {
        if (row.level == 2) continue;
        long prec = default_precision(row.level);
        const RecoveryWorkspace& ws = workspace(row.level, prec);
        RationalFunction f = express_in_hauptmodul(j_series(prec), ws, psi(row.level));
        CHECK(f == row.j);
        CHECK(f - RationalFunction::constant(Rational(1728)) == row.j1728);
    }
}

TEST_CASE("identity verification accepts truth and rejects perturbations") {
    const RecoveryWorkspace& ws = workspace(2, 24);
    TruncatedSeries j = j_series(24);
    RationalFunction good(reference::P({1, 256}).pow(3), reference::P({1, 0}).pow(2));
    CHECK(verify_identity(good, ws.h, j));
    RationalFunction bad(reference::P({1, 257}).pow(3), reference::P({1, 0}).pow(2));
    CHECK_FALSE(verify_identity(bad, ws.h, j));
    RationalFunction bad2(reference::P({1, 256}).pow(3) + reference::P({1}),
                          reference::P({1, 0}).pow(2));
    CHECK_FALSE(verify_identity(bad2, ws.h, j));
}

TEST_CASE("simple targets recover exactly") {
    const RecoveryWorkspace& ws = workspace(3, 20);
    // h itself.
    CHECK(express_in_hauptmodul(ws.h, ws) ==
          RationalFunction(IntPolynomial{0, 1}, IntPolynomial{1}));
    // 1/h.
    CHECK(express_in_hauptmodul(ws.hInv, ws) ==
          RationalFunction(IntPolynomial{1}, IntPolynomial{0, 1}));
    // A constant.
    CHECK(express_in_hauptmodul(TruncatedSeries::constant(rational(7, 3), 20), ws) ==
          RationalFunction::constant(rational(7, 3)));
    // (2h^2 - 5) / (h + 1).
    RationalFunction g(IntPolynomial{-5, 0, 2}, IntPolynomial{1, 1});
    TruncatedSeries target = poly_eval_series(g.num(), ws.h, 20) *
                             series_inv(poly_eval_series(g.den(), ws.h, 20));
    CHECK(express_in_hauptmodul(target, ws) == g);
}

TEST_CASE("failure modes") {
    const RecoveryWorkspace& ws = workspace(2, 24);
    TruncatedSeries j = j_series(24);
    // Explicit degree too small: no kernel vector.
    CHECK_THROWS_WITH(express_in_hauptmodul(j, ws, 1), "kernel dimension != 1");
    // Explicit degree too large: excess kernel.
    CHECK_THROWS_WITH(express_in_hauptmodul(j, ws, 5), "kernel dimension != 1");
    // Degree beyond what the precision supports.
    CHECK_THROWS_WITH(express_in_hauptmodul(j, ws, 12), "precision exhausted");
    // Tiny cap on the adaptive search.
    CHECK_THROWS_WITH(express_in_hauptmodul(j, ws, std::nullopt, 1), "precision exhausted");
}

TEST_CASE("moment matrix cross-check at level 2") {
    const RecoveryWorkspace& ws = workspace(2, 24);
    // J(H): j re-expanded in H = 1/h; simple pole, unit leading coefficient.
    TruncatedSeries j_of_h = series_compose(j_series(24), ws.qOfH);
    CHECK(j_of_h.offset() == -1);
    CHECK(j_of_h.coeff_at(Rational(-1)) == 1);
    RationalMatrix m = moment_matrix(j_of_h, 3);
    REQUIRE(m.size() == 5);
    RationalMatrix kernel = nullspace(m);
    CHECK(kernel.size() == 1);
    CHECK_THROWS_WITH(moment_matrix(j_of_h, 12), "precision exhausted");
    // Requires a simple pole with unit leading coefficient.
    CHECK_THROWS_AS(moment_matrix(TruncatedSeries::constant(Rational(1), 24), 3),
                    std::domain_error);
    CHECK_THROWS_AS(moment_matrix(Rational(2) * j_of_h, 3), std::domain_error);
}
