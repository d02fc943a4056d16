#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "clonot/conservation.hpp"
#include "clonot/fock.hpp"
#include "clonot/rng.hpp"

namespace clonot::cloning {

/**
 * Amplitudes A_a of the canonical cloning transformation, one per outcome
 * a in [n, m] (a = clones ending up in the correct state). Zero entries are
 * legal and kept; the vector must be normalized within 1e-12.
 */
class CoefficientVector {
public:
    // amplitudes[i] is the amplitude for outcome a = n + i; size m - n + 1.
    CoefficientVector(conservation::CloneSpec spec, std::vector<std::complex<double>> amplitudes);

    const conservation::CloneSpec& spec() const { return spec_; }
    std::complex<double> amplitude(int a) const;
    const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }

private:
    conservation::CloneSpec spec_;
    std::vector<std::complex<double>> amplitudes_;
};

/// Probabilities p_a of finding a clones in the correct state, a in [n, m].
class OutcomeDistribution {
public:
    // probabilities[i] is p_{n+i}; entries >= 0 and summing to 1 within 1e-12.
    OutcomeDistribution(conservation::CloneSpec spec, std::vector<double> probabilities);

    const conservation::CloneSpec& spec() const { return spec_; }
    double p(int a) const;
    const std::vector<double>& probabilities() const { return p_; }

private:
    conservation::CloneSpec spec_;
    std::vector<double> p_;
};

struct FidelityReport {
    int n = 0;
    int m = 0;
    double f_clone = 0.0;
    double f_not = 0.0;
    double residual = 0.0;  // (m-n) f_not - (m f_clone - n)

    nlohmann::ordered_json to_json() const;
    static std::string csv_header();
    std::string csv_row() const;
};

// |n,0> (x) |l,l> — the canonical input of a cloning run.
fock::SectorState initial_state(int n, int l);

/**
 * Output state of the canonical cloning transformation:
 *
 *   sum_a A_a |a, m-a> (x) |m-a, a-n> (x) |l', l'>,   l' = l - (m - n)
 *
 * with subsystems (clones, ancillas, reservoir). Throws if the reservoir is
 * too small for l' >= 0. The given reservoir size wins over the one recorded
 * in the coefficient vector's scenario.
 */
fock::SectorState build_output_state(const CoefficientVector& coeffs, int reservoir_pairs);
fock::SectorState build_output_state(const CoefficientVector& coeffs);

// p_a = |A_a|^2.
OutcomeDistribution outcome_distribution(const CoefficientVector& coeffs);

// Average fraction of clones in the correct state: sum_a p_a a/m.
double fidelity_clone(const OutcomeDistribution& dist);

// Average fraction of ancillas in the flipped state: sum_a p_a (a-n)/(m-n).
double fidelity_not(const OutcomeDistribution& dist);

// (m-n) fidelity_not - (m fidelity_clone - n). Zero within 1e-12 for every
// distribution, whatever the probabilities.
double clonot_residual(const OutcomeDistribution& dist);

FidelityReport fidelity_report(const OutcomeDistribution& dist);

// NOT fidelity implied by a cloning fidelity: (m f - n)/(m - n). The input
// must lie in the attainable range [n/m, 1].
double not_from_clone(double f_clone, int n, int m);

// Haar-like random amplitude vector (normalized complex Gaussians).
CoefficientVector random_coefficient_vector(const conservation::CloneSpec& spec,
                                            rng::Stream& stream);

// Uniform random outcome distribution (flat Dirichlet over [n, m]).
OutcomeDistribution random_outcome_distribution(const conservation::CloneSpec& spec,
                                                rng::Stream& stream);

}  // namespace clonot::cloning
