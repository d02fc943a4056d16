#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "clonot/fock.hpp"
#include "clonot/rng.hpp"
#include "clonot/universal.hpp"

using namespace clonot;
using fock::OccupationConfig;
using fock::ParticleKind;
using fock::QubitAmplitudes;
using fock::SectorState;
using fock::Term;
using std::complex;

namespace {

const complex<double> kI{0.0, 1.0};

SectorState basis_state(int n0, int n1) {
    return SectorState({Term{{OccupationConfig(n0, n1)}, 1.0}});
}

complex<double> amplitude_of(const SectorState& state, const fock::CompositeConfig& config) {
    for (const Term& t : state.terms())
        if (t.config == config)
            return t.amplitude;
    return 0.0;
}

}  // namespace

TEST_CASE("OccupationConfig enforces its constraints", "[fock]") {
    CHECK(OccupationConfig(3, 0).particle_count() == 3);
    CHECK_THROWS_AS(OccupationConfig(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(OccupationConfig(0, -2), std::invalid_argument);

    SECTION("fermionic modes cap at single occupation") {
        CHECK_NOTHROW(OccupationConfig(1, 1, ParticleKind::kFermionMode));
        CHECK_THROWS_AS(OccupationConfig(2, 0, ParticleKind::kFermionMode),
                        std::invalid_argument);
        CHECK_THROWS_AS(OccupationConfig(0, 2, ParticleKind::kFermionMode),
                        std::invalid_argument);
    }
}

TEST_CASE("SectorState validates and orders its terms", "[fock]") {
    SECTION("unnormalized states are rejected") {
        CHECK_THROWS_AS(SectorState({Term{{OccupationConfig(1, 0)}, 0.5}}),
                        std::invalid_argument);
    }

    SECTION("duplicate configurations are rejected") {
        CHECK_THROWS_AS(SectorState({Term{{OccupationConfig(1, 0)}, std::sqrt(0.5)},
                                     Term{{OccupationConfig(1, 0)}, std::sqrt(0.5)}}),
                        std::invalid_argument);
    }

    SECTION("mixed arity is rejected") {
        CHECK_THROWS_AS(
            SectorState({Term{{OccupationConfig(1, 0)}, std::sqrt(0.5)},
                         Term{{OccupationConfig(0, 1), OccupationConfig(0, 0)}, std::sqrt(0.5)}}),
            std::invalid_argument);
    }

    SECTION("terms come out sorted regardless of input order") {
        SectorState s({Term{{OccupationConfig(2, 0)}, std::sqrt(0.5)},
                       Term{{OccupationConfig(0, 2)}, std::sqrt(0.5)}});
        CHECK(s.terms().front().config.front().n0() == 0);
        CHECK(s.terms().back().config.front().n0() == 2);
    }

    SECTION("JSON form is the documented shape") {
        SectorState s({Term{{OccupationConfig(1, 0), OccupationConfig(2, 2)}, 1.0}});
        const auto j = s.to_json();
        REQUIRE(j.is_array());
        REQUIRE(j.size() == 1);
        CHECK(j[0]["config"] == nlohmann::ordered_json({{1, 0}, {2, 2}}));
        CHECK(j[0]["re"] == 1.0);
        CHECK(j[0]["im"] == 0.0);
    }
}

TEST_CASE("tensor composes states distributively", "[fock]") {
    SECTION("product of basis states is a single term") {
        const std::vector<SectorState> parts{basis_state(1, 0), basis_state(3, 3)};
        SectorState out = fock::tensor(parts);
        REQUIRE(out.terms().size() == 1);
        CHECK(out.terms()[0].config ==
              fock::CompositeConfig{OccupationConfig(1, 0), OccupationConfig(3, 3)});
        CHECK(out.terms()[0].amplitude == complex<double>{1.0, 0.0});
    }

    SECTION("superposition times basis state keeps both amplitudes") {
        const double alpha = 0.6, beta = 0.8;
        SectorState left({Term{{OccupationConfig(1, 0)}, alpha},
                          Term{{OccupationConfig(0, 1)}, beta}});
        const std::vector<SectorState> parts{left, basis_state(2, 2)};
        SectorState out = fock::tensor(parts);
        REQUIRE(out.terms().size() == 2);
        CHECK(amplitude_of(out, {OccupationConfig(1, 0), OccupationConfig(2, 2)}).real() ==
              Catch::Approx(alpha));
        CHECK(amplitude_of(out, {OccupationConfig(0, 1), OccupationConfig(2, 2)}).real() ==
              Catch::Approx(beta));
    }

    SECTION("product of two 2-term states matches the brute-force expansion") {
        SectorState left({Term{{OccupationConfig(1, 0)}, complex<double>(0.6, 0.0)},
                          Term{{OccupationConfig(0, 1)}, complex<double>(0.0, 0.8)}});
        SectorState right({Term{{OccupationConfig(2, 0)}, complex<double>(0.28, 0.45)},
                           Term{{OccupationConfig(0, 2)},
                                std::sqrt(complex<double>(1.0, 0.0) -
                                          complex<double>(0.28, 0.45) *
                                              std::conj(complex<double>(0.28, 0.45)))}});
        const std::vector<SectorState> parts{left, right};
        SectorState out = fock::tensor(parts);

        REQUIRE(out.terms().size() == 4);
        CHECK(out.squared_norm() == Catch::Approx(1.0).margin(1e-12));
        for (const Term& lt : left.terms())
            for (const Term& rt : right.terms()) {
                fock::CompositeConfig config = lt.config;
                config.insert(config.end(), rt.config.begin(), rt.config.end());
                CHECK(std::abs(amplitude_of(out, config) - lt.amplitude * rt.amplitude) < 1e-15);
            }
    }

    SECTION("empty part list is an error") {
        CHECK_THROWS_AS(fock::tensor({}), std::invalid_argument);
    }
}

TEST_CASE("mode_expand stacks copies into two modes", "[fock]") {
    SECTION("two copies") {
        QubitAmplitudes q(0.6, 0.8);
        SectorState out = fock::mode_expand(q, 2);
        REQUIRE(out.terms().size() == 3);
        CHECK(std::abs(amplitude_of(out, {OccupationConfig(2, 0)}) - complex<double>(0.36)) <
              1e-15);
        CHECK(std::abs(amplitude_of(out, {OccupationConfig(1, 1)}) -
                       std::sqrt(2.0) * complex<double>(0.48)) < 1e-15);
        CHECK(std::abs(amplitude_of(out, {OccupationConfig(0, 2)}) - complex<double>(0.64)) <
              1e-15);
    }

    SECTION("a pure-mode input concentrates on one occupation") {
        SectorState out = fock::mode_expand(QubitAmplitudes(1.0, 0.0), 5);
        REQUIRE(out.terms().size() == 1);
        CHECK(out.terms()[0].config == fock::CompositeConfig{OccupationConfig(5, 0)});
        CHECK(std::abs(out.terms()[0].amplitude - complex<double>(1.0)) < 1e-15);
    }

    SECTION("balanced input, two copies") {
        const double r = 1.0 / std::sqrt(2.0);
        SectorState out = fock::mode_expand(QubitAmplitudes(r, r), 2);
        CHECK(std::abs(amplitude_of(out, {OccupationConfig(2, 0)}) - complex<double>(0.5)) <
              1e-12);
        CHECK(std::abs(amplitude_of(out, {OccupationConfig(1, 1)}) - complex<double>(r)) < 1e-12);
        CHECK(std::abs(amplitude_of(out, {OccupationConfig(0, 2)}) - complex<double>(0.5)) <
              1e-12);
        CHECK(out.squared_norm() == Catch::Approx(1.0).margin(1e-12));
    }

    SECTION("fermions cannot stack") {
        CHECK_THROWS_AS(fock::mode_expand(QubitAmplitudes(1.0, 0.0), 2,
                                          ParticleKind::kFermionMode),
                        std::invalid_argument);
        CHECK_NOTHROW(fock::mode_expand(QubitAmplitudes(0.6, 0.8), 1,
                                        ParticleKind::kFermionMode));
    }

    SECTION("norm 1 for random inputs and copy counts") {
        rng::Stream stream(31);
        for (int trial = 0; trial < 50; ++trial) {
            const auto q = universal::haar_qubit(stream);
            const int copies = 1 + static_cast<int>(stream.next_u64() % 8);
            CHECK(fock::mode_expand(q, copies).squared_norm() ==
                  Catch::Approx(1.0).margin(1e-12));
        }
    }
}

TEST_CASE("sym_expand tabulates the tensor power", "[fock]") {
    SECTION("two copies") {
        QubitAmplitudes q(0.6, 0.8);
        const auto sym = fock::sym_expand(q, 2);
        CHECK(std::abs(sym.coefficient(0b00) - complex<double>(0.36)) < 1e-15);
        CHECK(std::abs(sym.coefficient(0b01) - complex<double>(0.48)) < 1e-15);
        CHECK(std::abs(sym.coefficient(0b10) - complex<double>(0.48)) < 1e-15);
        CHECK(std::abs(sym.coefficient(0b11) - complex<double>(0.64)) < 1e-15);
        CHECK(sym.squared_norm() == Catch::Approx(1.0).margin(1e-12));
    }

    SECTION("all-ones input hits a single string") {
        const auto sym = fock::sym_expand(QubitAmplitudes(0.0, 1.0), 3);
        for (std::uint32_t x = 0; x < 8; ++x)
            CHECK(std::abs(sym.coefficient(x) - (x == 7 ? 1.0 : 0.0)) < 1e-15);
    }

    SECTION("balanced input is flat") {
        const double r = 1.0 / std::sqrt(2.0);
        const auto sym = fock::sym_expand(QubitAmplitudes(r, r), 2);
        for (std::uint32_t x = 0; x < 4; ++x)
            CHECK(std::abs(sym.coefficient(x) - complex<double>(0.5)) < 1e-12);
    }
}

TEST_CASE("the two expansions are equivalent", "[fock]") {
    SECTION("pinned inputs") {
        CHECK(fock::equivalence_overlap(QubitAmplitudes(1.0, 0.0), 2) ==
              Catch::Approx(1.0).margin(1e-12));
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(fock::equivalence_overlap(QubitAmplitudes(r, r * kI), 2) ==
              Catch::Approx(1.0).margin(1e-12));
    }

    SECTION("property sweep over random inputs") {
        rng::Stream stream(417);
        for (int trial = 0; trial < 100; ++trial) {
            const auto q = universal::haar_qubit(stream);
            const int copies = 1 + static_cast<int>(stream.next_u64() % 6);
            CHECK(fock::equivalence_overlap(q, copies) == Catch::Approx(1.0).margin(1e-12));
        }
    }

    SECTION("zero-count statistics agree between the expansions") {
        rng::Stream stream(98);
        for (int trial = 0; trial < 30; ++trial) {
            const auto q = universal::haar_qubit(stream);
            const int copies = 1 + static_cast<int>(stream.next_u64() % 6);
            const auto sym = fock::sym_expand(q, copies);
            const auto mode = fock::mode_expand(q, copies);

            std::vector<double> from_sym(static_cast<std::size_t>(copies) + 1, 0.0);
            for (std::uint32_t x = 0; x < (std::uint32_t{1} << copies); ++x)
                from_sym[static_cast<std::size_t>(sym.zero_count(x))] +=
                    std::norm(sym.coefficient(x));

            for (int k = 0; k <= copies; ++k) {
                const auto amp = amplitude_of(mode, {OccupationConfig(k, copies - k)});
                CHECK(from_sym[static_cast<std::size_t>(k)] ==
                      Catch::Approx(std::norm(amp)).margin(1e-12));
            }
        }
    }
}

TEST_CASE("QubitAmplitudes normalization", "[fock]") {
    CHECK_THROWS_AS(QubitAmplitudes(1.0, 1.0), std::invalid_argument);
    CHECK_NOTHROW(QubitAmplitudes::normalized(1.0, 1.0));
    CHECK_THROWS_AS(QubitAmplitudes::normalized(0.0, 0.0), std::invalid_argument);
    const auto q = QubitAmplitudes::normalized(3.0, 4.0 * kI);
    CHECK(std::norm(q.a()) + std::norm(q.b()) == Catch::Approx(1.0).margin(1e-15));
}
