#include "p1stab/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "p1stab/config.hpp"

namespace p1stab {

std::string to_string(KRegion r) {
    switch (r) {
        case KRegion::interior: return "interior";
        case KRegion::boundary: return "boundary";
        case KRegion::outside: return "outside";
    }
    return "?";
}

Normalization normalize_to_X(const StabilityCondition& sc) {
    StabilityCondition at_zero = sc;
    GroupElement applied{};
    if (sc.base_twist() != 0) {
        if (sc.regime() == Regime::geometric) {
            at_zero = rebase(sc, 0);  // same condition, different chart
        } else {
            applied.tensor = checked_sub(0, sc.base_twist());
            at_zero = act(applied, sc);
        }
    }
    GroupElement rot{{-at_zero.log_m_beta(),
                      std::numbers::pi * (1.0 - at_zero.beta())},
                     0};
    applied = compose(rot, applied);
    StabilityCondition normalized(0, at_zero.alpha() + (1.0 - at_zero.beta()), 1.0,
                                  at_zero.log_m_alpha() - at_zero.log_m_beta(), 0.0);
    if (!(normalized.alpha() > 0.0)) {
        throw std::logic_error("normalization produced phi(O) <= 0");
    }
    return {normalized, applied};
}

namespace {

void require_normalized(const StabilityCondition& sc) {
    const double eps = phase_epsilon();
    if (sc.base_twist() != 0 || std::abs(sc.beta() - 1.0) > eps ||
        std::abs(sc.log_m_beta()) > eps) {
        throw std::invalid_argument("condition is not in the normalized slice X");
    }
}

}  // namespace

ChartPoint chart_X(const StabilityCondition& sc_X) {
    require_normalized(sc_X);
    return {{sc_X.log_m_alpha(), std::numbers::pi * sc_X.alpha()}};
}

StabilityCondition condition_at_chart(const ChartPoint& p) {
    return StabilityCondition(0, p.w.imag() / std::numbers::pi, 1.0, p.w.real(), 0.0);
}

bool in_strip(const StabilityCondition& sc_X) {
    require_normalized(sc_X);
    const double eps = phase_epsilon();
    std::complex<double> z = std::polar(std::exp(sc_X.log_m_alpha()),
                                        std::numbers::pi * sc_X.alpha());
    double x = z.real(), y = z.imag();
    return x <= 1.0 + eps && (x - 0.5) * (x - 0.5) + y * y >= 0.25 - eps;
}

KRegion in_K(std::complex<double> w) {
    const double eps = phase_epsilon();
    double x = w.real(), y = w.imag();
    if (!(y > 0.0)) return KRegion::outside;
    if (y > std::numbers::pi) return KRegion::interior;
    double d = std::exp(-std::abs(x)) - std::cos(y);
    if (std::abs(d) <= eps) return KRegion::boundary;
    return d > 0.0 ? KRegion::interior : KRegion::outside;
}

std::complex<double> identify_boundary(std::complex<double> w) {
    if (in_K(w) != KRegion::boundary) {
        throw std::invalid_argument("boundary identification applies only to boundary points");
    }
    return {-w.real(), w.imag()};
}

namespace {

struct Candidate {
    std::complex<double> w;
    GroupElement used;
    KRegion region;
};

// The normalized chart point of the tensor translate anchored at the
// consecutive pair (O(n-1), O(n)).
std::optional<Candidate> anchored_candidate(const StabilityCondition& sc, std::int64_t n) {
    double alpha_n = phase_of(sc, LineBundle{n, 0});
    double beta_n = phase_of(sc, LineBundle{n - 1, 1});
    double lm_n = std::log(std::abs(central_charge(sc, KClass{1, n})));
    double lm_prev = std::log(std::abs(central_charge(sc, KClass{1, n - 1})));
    std::complex<double> w{lm_n - lm_prev, std::numbers::pi * (alpha_n - beta_n + 1.0)};
    KRegion region = in_K(w);
    if (region == KRegion::outside) return std::nullopt;
    GroupElement forward = compose(GroupElement{{-lm_prev, std::numbers::pi * (1.0 - beta_n)}, 0},
                                   GroupElement{{0.0, 0.0}, checked_sub(0, n)});
    return Candidate{w, inverse(forward), region};
}

}  // namespace

ReductionResult reduce_to_K(const StabilityCondition& sc) {
    Normalization norm = normalize_to_X(sc);
    if (norm.condition.regime() != Regime::geometric) {
        // Beyond and on the wall the normalized representative is unique.
        ChartPoint p = chart_X(norm.condition);
        return {p, in_K(p.w), inverse(norm.applied), norm.condition};
    }

    // Tensor translates step the anchored charge by Z(O_x); exactly the
    // translates projecting into [0, 1] along that direction land in the
    // strip, so jump to the projection window and test its neighborhood.
    std::complex<double> z_base = central_charge(sc, KClass{1, sc.base_twist()});
    std::complex<double> z_pt = central_charge(sc, KClass{0, 1});
    double s0 = (z_base * std::conj(z_pt)).real() / std::norm(z_pt);
    auto n0 = static_cast<std::int64_t>(
        std::floor(static_cast<double>(sc.base_twist()) - s0));

    std::vector<Candidate> found;
    for (std::int64_t n = n0 - 1; n <= n0 + 2; ++n) {
        if (auto c = anchored_candidate(sc, n)) found.push_back(*c);
    }
    if (found.empty()) {
        throw std::logic_error("strip scan found no representative");
    }
    const Candidate& best = *std::max_element(
        found.begin(), found.end(),
        [](const Candidate& a, const Candidate& b) { return a.w.real() < b.w.real(); });

    std::complex<double> w = best.w;
    if (best.region == KRegion::boundary) w = {std::abs(w.real()), w.imag()};
    return {{w}, best.region, best.used, condition_at_chart({w})};
}

std::complex<double> map_disk(std::complex<double> z) {
    const std::complex<double> i{0.0, 1.0};
    if (std::abs(z + i) == 0.0) throw std::domain_error("map_disk pole at -i");
    return (z - i) / (z + i);
}

std::complex<double> map_a(std::complex<double> z) {
    const std::complex<double> i{0.0, 1.0};
    if (std::abs(z * i - 1.0) == 0.0) throw std::domain_error("map_a pole at -i");
    return -2.0 * i * (z * i + 1.0) / (z * i - 1.0);
}

std::complex<double> map_b(std::complex<double> z) {
    // Inverse Joukowski: the root of w + 1/w = z outside the unit circle,
    // with ties (z in [-2, 2]) resolved to the upper half-circle.  This
    // keeps the half-plane boundary correspondence -2 -> -1, 2 -> 1 and
    // sends the closed upper half-plane to the closed exterior-upper
    // region, whose inversion is the closed lower half-disk.
    std::complex<double> s = std::sqrt(z * z - 4.0);
    std::complex<double> w1 = (z + s) / 2.0;
    std::complex<double> w2 = (z - s) / 2.0;
    double m1 = std::abs(w1), m2 = std::abs(w2);
    if (m1 > m2 * (1.0 + 1e-12)) return w1;
    if (m2 > m1 * (1.0 + 1e-12)) return w2;
    return w1.imag() >= w2.imag() ? w1 : w2;
}

std::complex<double> map_inv(std::complex<double> z) {
    if (std::abs(z) == 0.0) throw std::domain_error("map_inv pole at 0");
    return 1.0 / z;
}

std::complex<double> map_half(std::complex<double> z) {
    if (std::abs(z - 1.0) == 0.0) throw std::domain_error("map_half pole at 1");
    const std::complex<double> i{0.0, 1.0};
    return -i * (z + 1.0) / (z - 1.0);
}

std::complex<double> map_square(std::complex<double> z) { return z * z; }

}  // namespace p1stab
