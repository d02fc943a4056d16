#include "clonot/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "clonot/numeric.hpp"

namespace clonot::fock {

OccupationConfig::OccupationConfig(int n0, int n1, ParticleKind kind)
    : n0_(n0), n1_(n1), kind_(kind) {
    if (n0 < 0 || n1 < 0)
        throw std::invalid_argument("OccupationConfig: negative occupation");
    if (kind == ParticleKind::kFermionMode && (n0 > 1 || n1 > 1))
        throw std::invalid_argument("OccupationConfig: fermionic mode holds at most one particle");
}

namespace {

bool config_less(const Term& lhs, const Term& rhs) {
    return std::lexicographical_compare(lhs.config.begin(), lhs.config.end(),
                                        rhs.config.begin(), rhs.config.end());
}

}  // namespace

SectorState::SectorState(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty())
        throw std::invalid_argument("SectorState: no terms");

    const std::size_t arity = terms_.front().config.size();
    if (arity == 0)
        throw std::invalid_argument("SectorState: empty composite configuration");
    for (const Term& t : terms_)
        if (t.config.size() != arity)
            throw std::invalid_argument("SectorState: mixed subsystem arity");

    std::sort(terms_.begin(), terms_.end(), config_less);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].config == terms_[i - 1].config)
            throw std::invalid_argument("SectorState: duplicate configuration");

    if (std::abs(squared_norm() - 1.0) > kNormTol)
        throw std::invalid_argument("SectorState: not normalized");
}

std::size_t SectorState::arity() const {
    return terms_.front().config.size();
}

double SectorState::squared_norm() const {
    double s = 0.0;
    for (const Term& t : terms_)
        s += std::norm(t.amplitude);
    return s;
}

nlohmann::ordered_json SectorState::to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Term& t : terms_) {
        nlohmann::ordered_json config = nlohmann::ordered_json::array();
        for (const OccupationConfig& c : t.config)
            config.push_back({c.n0(), c.n1()});
        out.push_back({{"config", std::move(config)},
                       {"re", t.amplitude.real()},
                       {"im", t.amplitude.imag()}});
    }
    return out;
}

SectorState tensor(std::span<const SectorState> parts) {
    if (parts.empty())
        throw std::invalid_argument("tensor: no parts");

    std::vector<Term> product{Term{{}, 1.0}};
    for (const SectorState& part : parts) {
        std::vector<Term> next;
        next.reserve(product.size() * part.terms().size());
        for (const Term& lhs : product)
            for (const Term& rhs : part.terms()) {
                const std::complex<double> amp = lhs.amplitude * rhs.amplitude;
                if (std::abs(amp) < kPruneTol)
                    continue;
                Term t{lhs.config, amp};
                t.config.insert(t.config.end(), rhs.config.begin(), rhs.config.end());
                next.push_back(std::move(t));
            }
        product = std::move(next);
    }
    return SectorState(std::move(product));
}

QubitAmplitudes::QubitAmplitudes(std::complex<double> a, std::complex<double> b) : a_(a), b_(b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kNormTol)
        throw std::invalid_argument("QubitAmplitudes: not normalized");
}

QubitAmplitudes QubitAmplitudes::normalized(std::complex<double> a, std::complex<double> b) {
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n == 0.0)
        throw std::invalid_argument("QubitAmplitudes: zero vector");
    return QubitAmplitudes(a / n, b / n);
}

SectorState mode_expand(const QubitAmplitudes& q, int copies, ParticleKind kind) {
    if (copies < 1)
        throw std::invalid_argument("mode_expand: copies must be >= 1");
    if (kind == ParticleKind::kFermionMode && copies >= 2)
        throw std::invalid_argument("mode_expand: cannot stack fermions in one mode");

    // Iterated products rather than std::pow: complex pow(x, 0) is NaN at x = 0.
    std::vector<std::complex<double>> apow(static_cast<std::size_t>(copies) + 1, 1.0);
    std::vector<std::complex<double>> bpow(static_cast<std::size_t>(copies) + 1, 1.0);
    for (int i = 1; i <= copies; ++i) {
        apow[i] = apow[i - 1] * q.a();
        bpow[i] = bpow[i - 1] * q.b();
    }

    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(copies) + 1);
    for (int k = 0; k <= copies; ++k) {
        const std::complex<double> amp = std::sqrt(binomial(copies, k)) * apow[k] * bpow[copies - k];
        if (std::abs(amp) < kPruneTol)
            continue;
        terms.push_back(Term{{OccupationConfig(k, copies - k, kind)}, amp});
    }
    return SectorState(std::move(terms));
}

SymExpansion::SymExpansion(int copies, std::vector<std::complex<double>> coeffs)
    : copies_(copies), coeffs_(std::move(coeffs)) {
    if (copies < 1)
        throw std::invalid_argument("SymExpansion: copies must be >= 1");
    if (coeffs_.size() != (std::size_t{1} << copies))
        throw std::invalid_argument("SymExpansion: coefficient count mismatch");
}

std::complex<double> SymExpansion::coefficient(std::uint32_t basis_index) const {
    return coeffs_.at(basis_index);
}

int SymExpansion::zero_count(std::uint32_t basis_index) const {
    return copies_ - std::popcount(basis_index);
}

double SymExpansion::squared_norm() const {
    double s = 0.0;
    for (const std::complex<double>& c : coeffs_)
        s += std::norm(c);
    return s;
}

SymExpansion sym_expand(const QubitAmplitudes& q, int copies) {
    if (copies < 1)
        throw std::invalid_argument("sym_expand: copies must be >= 1");
    if (copies > 30)
        throw std::invalid_argument("sym_expand: copies too large for a dense table");

    // Powers up front; coefficient of a string with k zeros is a^k b^(copies-k).
    std::vector<std::complex<double>> apow(static_cast<std::size_t>(copies) + 1, 1.0);
    std::vector<std::complex<double>> bpow(static_cast<std::size_t>(copies) + 1, 1.0);
    for (int i = 1; i <= copies; ++i) {
        apow[i] = apow[i - 1] * q.a();
        bpow[i] = bpow[i - 1] * q.b();
    }

    const std::uint32_t dim = std::uint32_t{1} << copies;
    std::vector<std::complex<double>> coeffs(dim);
    for (std::uint32_t x = 0; x < dim; ++x) {
        const int ones = std::popcount(x);
        coeffs[x] = apow[copies - ones] * bpow[ones];
    }
    return SymExpansion(copies, std::move(coeffs));
}

double equivalence_overlap(const QubitAmplitudes& q, int copies) {
    const SymExpansion sym = sym_expand(q, copies);
    const SectorState mode = mode_expand(q, copies);

    // Collapse equal-zero-count strings onto normalized symmetric components.
    std::vector<std::complex<double>> dicke(static_cast<std::size_t>(copies) + 1, 0.0);
    const std::uint32_t dim = std::uint32_t{1} << copies;
    for (std::uint32_t x = 0; x < dim; ++x)
        dicke[static_cast<std::size_t>(sym.zero_count(x))] += sym.coefficient(x);
    for (int k = 0; k <= copies; ++k)
        dicke[k] /= std::sqrt(binomial(copies, k));

    std::complex<double> overlap = 0.0;
    for (const Term& t : mode.terms()) {
        const int k = t.config.front().n0();
        overlap += std::conj(t.amplitude) * dicke[static_cast<std::size_t>(k)];
    }
    return std::abs(overlap);
}

}  // namespace clonot::fock
