#include "clonot/cloning.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "clonot/numeric.hpp"

namespace clonot::cloning {

using conservation::CloneSpec;

CoefficientVector::CoefficientVector(CloneSpec spec, std::vector<std::complex<double>> amplitudes)
    : spec_(spec), amplitudes_(std::move(amplitudes)) {
    const std::size_t want = static_cast<std::size_t>(spec_.m() - spec_.n()) + 1;
    if (amplitudes_.size() != want)
        throw std::invalid_argument("CoefficientVector: need one amplitude per outcome in [n, m]");
    double norm = 0.0;
    for (const std::complex<double>& a : amplitudes_)
        norm += std::norm(a);
    if (std::abs(norm - 1.0) > kNormTol)
        throw std::invalid_argument("CoefficientVector: not normalized");
}

std::complex<double> CoefficientVector::amplitude(int a) const {
    if (a < spec_.n() || a > spec_.m())
        throw std::out_of_range("CoefficientVector: outcome out of [n, m]");
    return amplitudes_[static_cast<std::size_t>(a - spec_.n())];
}

OutcomeDistribution::OutcomeDistribution(CloneSpec spec, std::vector<double> probabilities)
    : spec_(spec), p_(std::move(probabilities)) {
    const std::size_t want = static_cast<std::size_t>(spec_.m() - spec_.n()) + 1;
    if (p_.size() != want)
        throw std::invalid_argument("OutcomeDistribution: need one probability per outcome in [n, m]");
    double total = 0.0;
    for (double x : p_) {
        if (x < 0.0)
            throw std::invalid_argument("OutcomeDistribution: negative probability");
        total += x;
    }
    if (std::abs(total - 1.0) > kNormTol)
        throw std::invalid_argument("OutcomeDistribution: probabilities do not sum to 1");
}

double OutcomeDistribution::p(int a) const {
    if (a < spec_.n() || a > spec_.m())
        throw std::out_of_range("OutcomeDistribution: outcome out of [n, m]");
    return p_[static_cast<std::size_t>(a - spec_.n())];
}

nlohmann::ordered_json FidelityReport::to_json() const {
    return {{"N", n}, {"M", m}, {"f_clone", f_clone}, {"f_not", f_not}, {"residual", residual}};
}

std::string FidelityReport::csv_header() {
    return "N,M,f_clone,f_not,residual";
}

std::string FidelityReport::csv_row() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d,%d,%.12g,%.12g,%.12g", n, m, f_clone, f_not, residual);
    return buf;
}

fock::SectorState initial_state(int n, int l) {
    return fock::SectorState({fock::Term{
        {fock::OccupationConfig(n, 0), fock::OccupationConfig(l, l)}, 1.0}});
}

fock::SectorState build_output_state(const CoefficientVector& coeffs, int reservoir_pairs) {
    const CloneSpec& spec = coeffs.spec();
    const int lprime = reservoir_pairs - (spec.m() - spec.n());
    if (lprime < 0)
        throw std::invalid_argument("build_output_state: reservoir exhausted");

    std::vector<fock::Term> terms;
    terms.reserve(static_cast<std::size_t>(spec.m() - spec.n()) + 1);
    for (int a = spec.n(); a <= spec.m(); ++a) {
        const std::complex<double> amp = coeffs.amplitude(a);
        if (std::abs(amp) < kPruneTol)
            continue;
        terms.push_back(fock::Term{{fock::OccupationConfig(a, spec.m() - a),
                                    fock::OccupationConfig(spec.m() - a, a - spec.n()),
                                    fock::OccupationConfig(lprime, lprime)},
                                   amp});
    }
    return fock::SectorState(std::move(terms));
}

fock::SectorState build_output_state(const CoefficientVector& coeffs) {
    return build_output_state(coeffs, coeffs.spec().l());
}

OutcomeDistribution outcome_distribution(const CoefficientVector& coeffs) {
    std::vector<double> p;
    p.reserve(coeffs.amplitudes().size());
    for (const std::complex<double>& a : coeffs.amplitudes())
        p.push_back(std::norm(a));
    return OutcomeDistribution(coeffs.spec(), std::move(p));
}

double fidelity_clone(const OutcomeDistribution& dist) {
    const CloneSpec& spec = dist.spec();
    double f = 0.0;
    for (int a = spec.n(); a <= spec.m(); ++a)
        f += dist.p(a) * static_cast<double>(a) / spec.m();
    return f;
}

double fidelity_not(const OutcomeDistribution& dist) {
    const CloneSpec& spec = dist.spec();
    double f = 0.0;
    for (int a = spec.n(); a <= spec.m(); ++a)
        f += dist.p(a) * static_cast<double>(a - spec.n()) / (spec.m() - spec.n());
    return f;
}

double clonot_residual(const OutcomeDistribution& dist) {
    const CloneSpec& spec = dist.spec();
    return (spec.m() - spec.n()) * fidelity_not(dist) -
           (spec.m() * fidelity_clone(dist) - spec.n());
}

FidelityReport fidelity_report(const OutcomeDistribution& dist) {
    FidelityReport report;
    report.n = dist.spec().n();
    report.m = dist.spec().m();
    report.f_clone = fidelity_clone(dist);
    report.f_not = fidelity_not(dist);
    report.residual = (report.m - report.n) * report.f_not -
                      (report.m * report.f_clone - report.n);
    return report;
}

double not_from_clone(double f_clone, int n, int m) {
    if (m <= n || n < 1)
        throw std::invalid_argument("not_from_clone: need m > n >= 1");
    const double lo = static_cast<double>(n) / m;
    if (f_clone < lo - kNormTol || f_clone > 1.0 + kNormTol)
        throw std::domain_error("not_from_clone: fidelity outside attainable range [n/m, 1]");
    return (m * f_clone - n) / (m - n);
}

CoefficientVector random_coefficient_vector(const CloneSpec& spec, rng::Stream& stream) {
    std::vector<std::complex<double>> amps(static_cast<std::size_t>(spec.m() - spec.n()) + 1);
    double norm = 0.0;
    while (norm == 0.0) {
        for (std::complex<double>& a : amps) {
            a = stream.gaussian_complex();
            norm += std::norm(a);
        }
    }
    norm = std::sqrt(norm);
    for (std::complex<double>& a : amps)
        a /= norm;
    return CoefficientVector(spec, std::move(amps));
}

OutcomeDistribution random_outcome_distribution(const CloneSpec& spec, rng::Stream& stream) {
    return OutcomeDistribution(spec,
                               rng::simplex_uniform(stream, spec.m() - spec.n() + 1));
}

}  // namespace clonot::cloning
