#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "clonot/cloning.hpp"
#include "clonot/conservation.hpp"
#include "clonot/rng.hpp"

using namespace clonot;
using cloning::CoefficientVector;
using cloning::OutcomeDistribution;
using conservation::CloneSpec;
using fock::OccupationConfig;
using std::complex;

namespace {

OutcomeDistribution dist_1_2(double p1, double p2) {
    return OutcomeDistribution(CloneSpec::minimal(1, 2, 1), {p1, p2});
}

}  // namespace

TEST_CASE("CoefficientVector validation", "[cloning]") {
    const CloneSpec spec = CloneSpec::minimal(1, 2, 2);
    CHECK_NOTHROW(CoefficientVector(spec, {0.0, 1.0}));
    CHECK_THROWS_AS(CoefficientVector(spec, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientVector(spec, {0.5, 0.5}), std::invalid_argument);

    const CoefficientVector coeffs(spec, {complex<double>(0.0, 0.6), 0.8});
    CHECK(coeffs.amplitude(1) == complex<double>(0.0, 0.6));
    CHECK(coeffs.amplitude(2) == complex<double>(0.8, 0.0));
    CHECK_THROWS_AS(coeffs.amplitude(0), std::out_of_range);
    CHECK_THROWS_AS(coeffs.amplitude(3), std::out_of_range);
}

TEST_CASE("OutcomeDistribution validation", "[cloning]") {
    CHECK_NOTHROW(dist_1_2(0.5, 0.5));
    CHECK_THROWS_AS(dist_1_2(-0.1, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(dist_1_2(0.6, 0.6), std::invalid_argument);
}

TEST_CASE("build_output_state produces the canonical terms", "[cloning]") {
    const CloneSpec spec = CloneSpec::minimal(1, 2, 2);

    SECTION("perfect-cloning amplitude") {
        const auto out = cloning::build_output_state(CoefficientVector(spec, {0.0, 1.0}), 2);
        REQUIRE(out.terms().size() == 1);
        CHECK(out.terms()[0].config ==
              fock::CompositeConfig{OccupationConfig(2, 0), OccupationConfig(0, 1),
                                    OccupationConfig(1, 1)});
    }

    SECTION("no-gain amplitude") {
        const auto out = cloning::build_output_state(CoefficientVector(spec, {1.0, 0.0}), 2);
        REQUIRE(out.terms().size() == 1);
        CHECK(out.terms()[0].config ==
              fock::CompositeConfig{OccupationConfig(1, 1), OccupationConfig(1, 0),
                                    OccupationConfig(1, 1)});
    }

    SECTION("reservoir too small") {
        CHECK_THROWS_AS(cloning::build_output_state(CoefficientVector(spec, {0.0, 1.0}), 0),
                        std::invalid_argument);
    }

    SECTION("clones + ancillas carry angular momentum -n in every term") {
        rng::Stream stream(5);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(stream.next_u64() % 4);
            const int m = n + 1 + static_cast<int>(stream.next_u64() % 6);
            const auto cell = CloneSpec::minimal(n, m, m - n);
            const auto out = cloning::build_output_state(
                cloning::random_coefficient_vector(cell, stream), m - n);
            for (const fock::Term& t : out.terms()) {
                const fock::CompositeConfig head{t.config[0], t.config[1]};
                CHECK(conservation::angular_momentum(head) == -n);
            }
            CHECK(conservation::audit(cloning::initial_state(n, m - n), out).ok);
        }
    }

    SECTION("scenario reservoir is the default") {
        const auto with_default = cloning::build_output_state(CoefficientVector(spec, {0.0, 1.0}));
        const auto explicit_l =
            cloning::build_output_state(CoefficientVector(spec, {0.0, 1.0}), spec.l());
        CHECK(with_default.to_json() == explicit_l.to_json());
    }
}

TEST_CASE("outcome_distribution squares amplitudes", "[cloning]") {
    const CloneSpec spec = CloneSpec::minimal(1, 2, 1);

    CHECK(cloning::outcome_distribution(CoefficientVector(spec, {0.0, 1.0})).p(2) == 1.0);

    const double r = 1.0 / std::sqrt(2.0);
    const auto even = cloning::outcome_distribution(CoefficientVector(spec, {r, r}));
    CHECK(even.p(1) == Catch::Approx(0.5).margin(1e-15));
    CHECK(even.p(2) == Catch::Approx(0.5).margin(1e-15));

    SECTION("random amplitude vectors give normalized distributions") {
        rng::Stream stream(77);
        for (int trial = 0; trial < 50; ++trial) {
            const auto cell = CloneSpec::minimal(2, 7, 5);
            const auto dist = cloning::outcome_distribution(
                cloning::random_coefficient_vector(cell, stream));
            double total = 0.0;
            for (int a = 2; a <= 7; ++a)
                total += dist.p(a);
            CHECK(total == Catch::Approx(1.0).margin(1e-12));
        }
    }
}

TEST_CASE("clone and NOT fidelities", "[cloning]") {
    CHECK(cloning::fidelity_clone(dist_1_2(0.0, 1.0)) == 1.0);
    CHECK(cloning::fidelity_clone(dist_1_2(0.5, 0.5)) == Catch::Approx(0.75).margin(1e-15));
    CHECK(cloning::fidelity_clone(dist_1_2(1.0 / 3.0, 2.0 / 3.0)) ==
          Catch::Approx(5.0 / 6.0).margin(1e-15));

    CHECK(cloning::fidelity_not(dist_1_2(0.0, 1.0)) == 1.0);
    CHECK(cloning::fidelity_not(dist_1_2(0.5, 0.5)) == Catch::Approx(0.5).margin(1e-15));
    CHECK(cloning::fidelity_not(dist_1_2(1.0 / 3.0, 2.0 / 3.0)) ==
          Catch::Approx(2.0 / 3.0).margin(1e-15));
}

TEST_CASE("the residual vanishes for every distribution", "[cloning]") {
    CHECK(std::abs(cloning::clonot_residual(dist_1_2(0.0, 1.0))) <= 1e-12);
    CHECK(std::abs(cloning::clonot_residual(dist_1_2(0.5, 0.5))) <= 1e-12);
    CHECK(std::abs(cloning::clonot_residual(dist_1_2(1.0 / 3.0, 2.0 / 3.0))) <= 1e-12);

    SECTION("all mass on a = n is the worst case and still exact") {
        const CloneSpec spec = CloneSpec::minimal(2, 5, 3);
        std::vector<double> p(4, 0.0);
        p[0] = 1.0;
        const OutcomeDistribution dist(spec, p);
        CHECK(cloning::fidelity_clone(dist) == Catch::Approx(2.0 / 5.0).margin(1e-15));
        CHECK(cloning::fidelity_not(dist) == 0.0);
        CHECK(std::abs(cloning::clonot_residual(dist)) <= 1e-12);
    }

    SECTION("random sweep, with the NOT never beating the cloner") {
        rng::Stream seeds(12345);
        double max_residual = 0.0;
        long ordering_violations = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(seeds.next_u64() % 19);
            const int m = n + 1 + static_cast<int>(seeds.next_u64() % (20 - n));
            const auto spec = CloneSpec::minimal(n, m, m - n);
            const auto dist = cloning::random_outcome_distribution(spec, seeds);
            max_residual = std::max(max_residual, std::abs(cloning::clonot_residual(dist)));
            if (cloning::fidelity_not(dist) > cloning::fidelity_clone(dist))
                ++ordering_violations;
        }
        CHECK(max_residual <= 1e-12);
        CHECK(ordering_violations == 0);
    }
}

TEST_CASE("not_from_clone", "[cloning]") {
    CHECK(cloning::not_from_clone(5.0 / 6.0, 1, 2) == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(cloning::not_from_clone(1.0, 1, 2) == Catch::Approx(1.0).margin(1e-15));

    // the optimal point for n=2, m=5 lands on the m-independent value 3/4
    const double f = (5.0 * (2 + 1) + 2) / (5.0 * (2 + 2));
    CHECK(cloning::not_from_clone(f, 2, 5) == Catch::Approx(0.75).margin(1e-15));

    CHECK_THROWS_AS(cloning::not_from_clone(0.4, 1, 2), std::domain_error);
    CHECK_THROWS_AS(cloning::not_from_clone(1.1, 1, 2), std::domain_error);
    CHECK_THROWS_AS(cloning::not_from_clone(0.9, 2, 2), std::invalid_argument);

    SECTION("approaches the identity as m grows") {
        double previous = 1.0;
        for (int m : {10, 100, 1000}) {
            const double fm = static_cast<double>(m * 2 + 1) / (3.0 * m);
            const double diff = std::abs(cloning::not_from_clone(fm, 1, m) - fm);
            CHECK(diff < previous);
            previous = diff;
        }
        CHECK(previous < 1e-3);
    }
}

TEST_CASE("FidelityReport serialization", "[cloning]") {
    const auto report = cloning::fidelity_report(dist_1_2(1.0 / 3.0, 2.0 / 3.0));
    CHECK(report.f_clone == Catch::Approx(5.0 / 6.0).margin(1e-15));
    CHECK(report.f_not == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(std::abs(report.residual) <= 1e-12);

    const auto j = report.to_json();
    CHECK(j["N"] == 1);
    CHECK(j["M"] == 2);
    CHECK(j.dump().find("\"f_clone\"") != std::string::npos);

    CHECK(cloning::FidelityReport::csv_header() == "N,M,f_clone,f_not,residual");
    CHECK(report.csv_row().substr(0, 4) == "1,2,");
}
