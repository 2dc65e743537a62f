#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "dgldpc/ensemble.hpp"
#include "dgldpc/errors.hpp"
#include "dgldpc/exit.hpp"
#include "dgldpc/stability.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dgldpc;
using fixtures::ensemble;
using fixtures::generic;
using fixtures::rep;
using fixtures::spc;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ValidatedEnsemble code32_spc6() { return ensemble({generic(fixtures::kCode32, 1.0)}, {spc(6, 1.0)}); }

}  // namespace

TEST_CASE("CND slope at zero") {
    CHECK(cnd_derivative_at_zero(ensemble({rep(2, 1.0)}, {spc(6, 1.0)})) == -5.0);
    CHECK(cnd_derivative_at_zero(ensemble({rep(2, 1.0)}, {generic(fixtures::kHamming74, 1.0)})) ==
          0.0);
    CHECK(cnd_derivative_at_zero(ensemble({rep(2, 1.0)}, {fixtures::generic_spc(3, 1.0)})) ==
          doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(cnd_derivative_at_zero(
              ensemble({rep(2, 1.0)}, {spc(6, 0.5), generic(fixtures::kHamming74, 0.5)})) ==
          doctest::Approx(-2.5));
}

TEST_CASE("VND slope at zero") {
    CHECK(vnd_derivative_at_zero(ensemble({rep(2, 1.0)}, {spc(6, 1.0)}), 0.37) ==
          doctest::Approx(-0.37).epsilon(1e-15));
    const auto dmin3 = ensemble({rep(3, 0.5), generic(fixtures::kHamming74, 0.5)}, {spc(6, 1.0)});
    for (double q : {0.0, 0.3, 1.0}) CHECK(vnd_derivative_at_zero(dmin3, q) == 0.0);
    CHECK(vnd_derivative_at_zero(code32_spc6(), 0.5) == doctest::Approx(-5.0 / 6.0).epsilon(1e-15));
    CHECK_THROWS_AS(vnd_derivative_at_zero(code32_spc6(), 1.2), std::invalid_argument);
}

TEST_CASE("GLDPC bound") {
    const auto ldpc = gldpc_stability_bound(ensemble({rep(2, 1.0)}, {spc(6, 1.0)}));
    REQUIRE(ldpc.has_value());
    CHECK(*ldpc == doctest::Approx(0.2).epsilon(1e-15));

    const auto vacuous =
        gldpc_stability_bound(ensemble({rep(2, 1.0)}, {generic(fixtures::kHamming74, 1.0)}));
    REQUIRE(vacuous.has_value());
    CHECK(*vacuous == kInf);

    CHECK_FALSE(gldpc_stability_bound(code32_spc6()).has_value());

    const auto no_rep2 = gldpc_stability_bound(ensemble({rep(3, 1.0)}, {spc(6, 1.0)}));
    REQUIRE(no_rep2.has_value());
    CHECK(*no_rep2 == kInf);

    for (double lambda2 : {0.25, 0.5, 1.0}) {
        const auto ens = lambda2 < 1.0 ? ensemble({rep(2, lambda2), rep(3, 1.0 - lambda2)},
                                                  {spc(6, 0.4), spc(8, 0.6)})
                                       : ensemble({rep(2, 1.0)}, {spc(6, 0.4), spc(8, 0.6)});
        const double rho_prime = 0.4 * 5 + 0.6 * 7;
        CHECK(std::abs(*gldpc_stability_bound(ens) - 1.0 / (lambda2 * rho_prime)) <= 1e-12);
    }
}

TEST_CASE("D-GLDPC stability check") {
    const auto ens = code32_spc6();
    const auto at0 = dgldpc_stability_check(ens, 0.0);
    CHECK(at0.holds);
    CHECK(at0.lhs == 0.0);

    const auto c = dgldpc_stability_check(ens, 0.1);
    CHECK(c.holds);
    CHECK(c.lhs == doctest::Approx(0.14).epsilon(1e-14));
    CHECK(c.rhs == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(c.margin == doctest::Approx(0.06).epsilon(1e-13));

    CHECK_FALSE(dgldpc_stability_check(ens, 0.3).holds);

    const auto vac = dgldpc_stability_check(
        ensemble({rep(2, 1.0)}, {generic(fixtures::kHamming74, 1.0)}), 0.9);
    CHECK(vac.holds);
    CHECK(vac.rhs == kInf);
}

TEST_CASE("stability boundary") {
    const auto roots = dgldpc_stability_boundary(code32_spc6());
    CHECK_FALSE(roots.vacuous);
    REQUIRE(roots.roots.size() == 1);
    CHECK(std::abs(roots.roots[0] - 0.14017542509913805) <= 1e-9);

    // Independent dense scan of the quadratic.
    const auto lhs = [](double q) { return (2.0 / 3.0) * (2 * q * (1 - q) + 3 * q * q); };
    double scan = -1;
    for (int i = 0; i < 1'000'000; ++i) {
        const double q = i / 1e6;
        if (lhs(q) <= 0.2 && lhs(q + 1e-6) > 0.2) scan = q;
    }
    CHECK(std::abs(roots.roots[0] - scan) <= 2e-6);

    const auto gldpc = ensemble({rep(2, 0.5), rep(3, 0.5)}, {spc(6, 1.0)});
    const auto one = dgldpc_stability_boundary(gldpc);
    REQUIRE(one.roots.size() == 1);
    CHECK(one.roots[0] == doctest::Approx(*gldpc_stability_bound(gldpc)).epsilon(1e-9));

    const auto never = dgldpc_stability_boundary(ensemble({rep(2, 0.1), rep(3, 0.9)}, {spc(3, 1.0)}));
    CHECK(never.roots.empty());
    CHECK_FALSE(never.vacuous);

    const auto vac =
        dgldpc_stability_boundary(ensemble({rep(2, 1.0)}, {generic(fixtures::kHamming74, 1.0)}));
    CHECK(vac.vacuous);
    CHECK(vac.roots.empty());
}

TEST_CASE("derivative matching") {
    const auto ldpc = ensemble({rep(2, 1.0)}, {spc(6, 1.0)});
    const auto at = derivative_matching_check(ldpc, 0.2);
    CHECK(at.endpoint_ok);
    CHECK(at.tangent_at_zero);

    const auto below = derivative_matching_check(ldpc, 0.1);
    CHECK(below.endpoint_ok);
    CHECK(below.slope_gap > 0.0);
    CHECK_FALSE(below.tangent_at_zero);

    CHECK(derivative_matching_check(code32_spc6(), 0.4).endpoint_ok);
    CHECK_THROWS_AS(
        derivative_matching_check(ensemble({rep(2, 1.0)}, {generic(fixtures::kHamming74, 1.0)}), 0.3),
        UndefinedSlope);
}

TEST_CASE("generic declarations give the closed-form slopes") {
    for (std::size_t j = 3; j <= 6; ++j) {
        const auto closed = ensemble({rep(2, 0.4), rep(3, 0.6)}, {spc(j, 1.0)});
        const auto gen = ensemble({fixtures::generic_rep(2, 0.4), rep(3, 0.6)},
                                  {fixtures::generic_spc(j, 1.0)});
        CHECK(std::abs(cnd_derivative_at_zero(closed) - cnd_derivative_at_zero(gen)) <= 1e-12);
        for (double q : {0.0, 0.2, 0.5, 1.0})
            CHECK(std::abs(vnd_derivative_at_zero(closed, q) - vnd_derivative_at_zero(gen, q)) <=
                  1e-12);
        const auto code = ComponentCode::single_parity_check(j);
        CHECK(2 * delta_n2(code) == static_cast<Count>(j * (j - 1)));
    }
}

TEST_CASE("analytic slopes match finite differences") {
    const std::vector<ValidatedEnsemble> ensembles{
        ensemble({rep(2, 1.0)}, {spc(6, 1.0)}),
        code32_spc6(),
        ensemble({rep(2, 0.3), generic(fixtures::kCode32, 0.4), rep(3, 0.3)},
                 {spc(6, 0.6), generic(fixtures::kHamming74, 0.4)}),
        ensemble({generic(fixtures::kHamming74, 0.5), rep(2, 0.5)}, {spc(5, 1.0)}),
    };
    for (const auto& ens : ensembles) {
        const double cnd = oracle::derivative_at_zero([&](double p) { return exit_cnd(ens, p); });
        CHECK(std::abs(cnd - cnd_derivative_at_zero(ens)) <= 1e-6);
        for (double q : {0.1, 0.5, 0.9}) {
            const double vnd =
                oracle::derivative_at_zero([&](double p) { return exit_vnd(ens, p, q); });
            CHECK(std::abs(vnd - vnd_derivative_at_zero(ens, q)) <= 1e-6);
        }
    }
}

TEST_CASE("coefficient laws on random codes") {
    std::mt19937_64 rng(5);
    std::size_t tested = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 9)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        const ComponentCode code(oracle::random_full_rank(rng, k, n));
        const std::size_t d = min_distance_bruteforce(code);
        if (d < 2) continue;
        ++tested;
        const auto c = exit_coefficients(code);
        CHECK(c.a(0) == 0);
        bool a1z_zero = true;
        for (std::size_t z = 0; z <= k; ++z) {
            CHECK(c.a(0, z) == 0);
            if (c.a(1, z) != 0) a1z_zero = false;
        }
        CHECK((c.a(1) == 0) == (d >= 3));
        CHECK(a1z_zero == (d >= 3));
    }
    CHECK(tested > 100);
}

TEST_CASE("report and JSON") {
    const auto ens = ensemble({rep(2, 0.3), generic(fixtures::kCode32, 0.4), rep(3, 0.3)},
                              {spc(6, 0.6), generic(fixtures::kHamming74, 0.4)});
    const auto r = stability_report(ens);
    CHECK(r.cnd_slope_at_zero == doctest::Approx(-3.0));
    CHECK_FALSE(r.gldpc_bound.has_value());
    CHECK_FALSE(r.applicability.is_gldpc);
    CHECK_FALSE(r.applicability.all_var_dmin_ge3);
    CHECK(r.applicability.all_chk_dmin_ge3);
    REQUIRE(r.dmin2_check_terms.size() == 1);
    CHECK(r.dmin2_check_terms[0].kind == "spc(6)");
    REQUIRE(r.dmin2_var_terms.size() == 2);
    CHECK(r.cnd_slope_at_zero_ia() == doctest::Approx(3.0));

    for (double q : {0.0, 0.25, 0.8}) {
        double poly = 0, qz = 1;
        for (double coef : r.vnd_slope_fn) {
            poly += coef * qz;
            qz *= q;
        }
        CHECK(poly == doctest::Approx(vnd_derivative_at_zero(ens, q)).epsilon(1e-13));
    }

    const auto j = to_json(r);
    CHECK(j["gldpc_bound"].is_null());
    CHECK(j.contains("cnd_slope_at_zero"));

    const auto vac = to_json(stability_report(ensemble({rep(2, 1.0)}, {generic(fixtures::kHamming74, 1.0)})));
    CHECK(vac["gldpc_bound"] == "inf");
}
