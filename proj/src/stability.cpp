#include "p1stab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "p1stab/config.hpp"

namespace p1stab {

namespace {

constexpr std::int64_t kTwistScanCap = 1'000'000;

std::complex<double> polar_charge(double log_m, double phase) {
    return std::polar(std::exp(log_m), std::numbers::pi * phase);
}

std::complex<double> charge_alpha(const StabilityCondition& sc) {
    return polar_charge(sc.log_m_alpha(), sc.alpha());
}

std::complex<double> charge_beta(const StabilityCondition& sc) {
    return polar_charge(sc.log_m_beta(), sc.beta());
}

std::complex<double> charge_point(const StabilityCondition& sc) {
    return charge_alpha(sc) + charge_beta(sc);
}

// The unique lift of raw (an arg/pi value) congruent mod 2 in
// [anchor - eps, anchor + 2 - eps).
double lift_from(double anchor, double raw) {
    double r = std::fmod(raw - anchor, 2.0);
    if (r < 0.0) r += 2.0;
    if (r >= 2.0 - phase_epsilon()) r -= 2.0;
    return anchor + r;
}

// Lifted phase of the sheaf O(n) in the geometric regime: bundles with
// n >= base lift next to alpha below psi, bundles below the base lift
// through their shift by one into (psi, beta].
double geometric_sheaf_phase(const StabilityCondition& sc, std::int64_t n, double psi) {
    const double eps = phase_epsilon();
    if (n >= sc.base_twist()) {
        std::complex<double> z = central_charge(sc, KClass{1, n});
        double th = lift_from(sc.alpha(), std::arg(z) / std::numbers::pi);
        if (th < sc.alpha() - eps || th > psi + eps) {
            throw std::logic_error("geometric phase lift escaped [alpha, psi)");
        }
        return th;
    }
    std::complex<double> z = -central_charge(sc, KClass{1, n});
    double th = lift_from(psi, std::arg(z) / std::numbers::pi);
    if (th < psi - eps || th > sc.beta() + eps) {
        throw std::logic_error("geometric phase lift escaped (psi, beta]");
    }
    return th - 1.0;
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::geometric: return "geometric";
        case Regime::wall: return "wall";
        case Regime::quiver: return "quiver";
    }
    return "?";
}

StabilityCondition::StabilityCondition(std::int64_t base_twist, double alpha, double beta,
                                       double log_m_alpha, double log_m_beta)
    : base_twist_(base_twist),
      alpha_(alpha),
      beta_(beta),
      log_m_alpha_(log_m_alpha),
      log_m_beta_(log_m_beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(log_m_alpha) ||
        !std::isfinite(log_m_beta)) {
        throw std::invalid_argument("stability condition parameters must be finite");
    }
    if (!(alpha > beta - 1.0)) {
        throw std::invalid_argument(
            "no stability condition with alpha <= beta - 1: the charges of O(i) and "
            "O(i-1)[1] would be anti-aligned");
    }
    if (std::abs(alpha - beta) <= phase_epsilon()) {
        regime_ = Regime::wall;
    } else {
        regime_ = alpha < beta ? Regime::geometric : Regime::quiver;
    }
}

StabilityCondition make_condition(std::int64_t base_twist, double alpha, double beta,
                                  double log_m_alpha, double log_m_beta) {
    return StabilityCondition(base_twist, alpha, beta, log_m_alpha, log_m_beta);
}

std::complex<double> central_charge(const StabilityCondition& sc, const KClass& c) {
    std::int64_t point_count = checked_sub(c.degree, checked_mul(c.rank, sc.base_twist()));
    return static_cast<double>(c.rank) * charge_alpha(sc) +
           static_cast<double>(point_count) * charge_point(sc);
}

double torsion_phase(const StabilityCondition& sc) {
    const double eps = phase_epsilon();
    switch (sc.regime()) {
        case Regime::quiver:
            throw std::domain_error("torsion sheaves are not semistable in the quiver regime");
        case Regime::wall:
            return sc.alpha();
        case Regime::geometric: {
            double psi = lift_from(sc.alpha(), std::arg(charge_point(sc)) / std::numbers::pi);
            if (psi < sc.alpha() - eps || psi > sc.beta() + eps) {
                throw std::logic_error("torsion phase lift escaped [alpha, beta]");
            }
            return psi;
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<double> semistable_phase(const StabilityCondition& sc, const Indecomposable& ind) {
    const std::int64_t shift = shift_of(ind);
    switch (sc.regime()) {
        case Regime::geometric: {
            double psi = torsion_phase(sc);
            if (const auto* lb = std::get_if<LineBundle>(&ind)) {
                return geometric_sheaf_phase(sc, lb->twist, psi) + static_cast<double>(shift);
            }
            return psi + static_cast<double>(shift);
        }
        case Regime::wall: {
            std::int64_t level = shift;
            if (const auto* lb = std::get_if<LineBundle>(&ind); lb && lb->twist < sc.base_twist()) {
                level -= 1;
            }
            return sc.alpha() + static_cast<double>(level);
        }
        case Regime::quiver: {
            const auto* lb = std::get_if<LineBundle>(&ind);
            if (!lb) return std::nullopt;
            if (lb->twist == sc.base_twist()) {
                return sc.alpha() + static_cast<double>(shift);
            }
            if (lb->twist == sc.base_twist() - 1) {
                return sc.beta() + static_cast<double>(shift) - 1.0;
            }
            return std::nullopt;
        }
    }
    throw std::logic_error("unreachable");
}

double phase_of(const StabilityCondition& sc, const Indecomposable& ind) {
    if (auto p = semistable_phase(sc, ind)) return *p;
    throw std::domain_error("object is not semistable: " + format_indecomposable(ind));
}

bool is_semistable(const StabilityCondition& sc, const DecomposedObject& obj) {
    if (obj.is_zero()) {
        throw std::invalid_argument("semistability is undefined for the zero object");
    }
    bool first = true;
    double lo = 0.0, hi = 0.0;
    for (const auto& s : obj.summands()) {
        auto p = semistable_phase(sc, s.part);
        if (!p) return false;
        lo = first ? *p : std::min(lo, *p);
        hi = first ? *p : std::max(hi, *p);
        first = false;
    }
    return hi - lo <= phase_epsilon();
}

namespace {

struct RayPart {
    double phase;
    Summand summand;
};

// Splits one summand into its semistable constituents with phases.  In
// the quiver regime this applies the defining exact triangles:
//   O(i)^{n-i+1}        -> O(n)      -> O(i-1)^{n-i}[1]      (n > i)
//   O(i)^{i-1-n}[-1]    -> O(n)      -> O(i-1)^{i-n}         (n < i-1)
//   O(i)^{l}            -> T(x,l)    -> O(i-1)^{l}[1]
void split_summand(const StabilityCondition& sc, const Summand& s, std::vector<RayPart>& out) {
    if (sc.regime() != Regime::quiver) {
        out.push_back({*semistable_phase(sc, s.part), s});
        return;
    }
    const std::int64_t i = sc.base_twist();
    const double alpha = sc.alpha();
    const double beta = sc.beta();
    if (const auto* lb = std::get_if<LineBundle>(&s.part)) {
        const std::int64_t n = lb->twist;
        const std::int64_t k = lb->shift;
        if (n == i || n == i - 1) {
            out.push_back({*semistable_phase(sc, s.part), s});
            return;
        }
        if (n > i) {
            std::int64_t a = checked_add(checked_sub(n, i), 1);
            std::int64_t b = checked_sub(n, i);
            out.push_back({alpha + static_cast<double>(k),
                           {LineBundle{i, k}, checked_mul(s.multiplicity, a)}});
            out.push_back({beta + static_cast<double>(k),
                           {LineBundle{i - 1, checked_add(k, 1)}, checked_mul(s.multiplicity, b)}});
            return;
        }
        std::int64_t a = checked_sub(checked_sub(i, 1), n);
        std::int64_t b = checked_sub(i, n);
        out.push_back({alpha + static_cast<double>(k) - 1.0,
                       {LineBundle{i, checked_sub(k, 1)}, checked_mul(s.multiplicity, a)}});
        out.push_back({beta + static_cast<double>(k) - 1.0,
                       {LineBundle{i - 1, k}, checked_mul(s.multiplicity, b)}});
        return;
    }
    const auto& t = std::get<Torsion>(s.part);
    std::int64_t count = checked_mul(s.multiplicity, t.length);
    out.push_back({alpha + static_cast<double>(t.shift), {LineBundle{i, t.shift}, count}});
    out.push_back({beta + static_cast<double>(t.shift),
                   {LineBundle{i - 1, checked_add(t.shift, 1)}, count}});
}

}  // namespace

HNFiltration hn(const StabilityCondition& sc, const DecomposedObject& obj) {
    if (obj.is_zero()) {
        throw std::invalid_argument("the zero object has no HN filtration");
    }
    std::vector<RayPart> parts;
    for (const auto& s : obj.summands()) split_summand(sc, s, parts);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const RayPart& a, const RayPart& b) { return a.phase > b.phase; });

    const double eps = phase_epsilon();
    HNFiltration out;
    std::size_t k = 0;
    while (k < parts.size()) {
        std::size_t begin = k;
        std::vector<Summand> group{parts[k].summand};
        ++k;
        while (k < parts.size() && parts[begin].phase - parts[k].phase <= eps) {
            group.push_back(parts[k].summand);
            ++k;
        }
        DecomposedObject piece{std::move(group)};
        std::complex<double> z = central_charge(sc, class_of(piece));
        out.push_back({parts[begin].phase, std::move(piece), z});
    }
    for (std::size_t j = 1; j < out.size(); ++j) {
        if (!(out[j - 1].phase - out[j].phase > eps)) {
            throw std::logic_error("HN phases failed to decrease strictly");
        }
    }
    return out;
}

double mass(const StabilityCondition& sc, const DecomposedObject& obj) {
    double total = 0.0;
    for (const auto& p : hn(sc, obj)) total += std::abs(p.charge);
    return total;
}

std::string to_string(const HeartDescriptor& h) {
    if (const auto* c = std::get_if<CohShift>(&h)) {
        return "CohShift(" + std::to_string(c->j) + ")";
    }
    if (const auto* p = std::get_if<HeartPair>(&h)) {
        return "Pair(" + std::to_string(p->p) + "," + std::to_string(p->i) + "," +
               std::to_string(p->j) + ")";
    }
    const auto& e = std::get<ExoticHeart>(h);
    std::string out = "Exotic(";
    for (std::size_t k = 0; k < e.points.size(); ++k) {
        if (k) out += ",";
        out += e.points[k];
    }
    return out + ")";
}

namespace {

// Lifted phase of O(m)[1] as a function of m, valued in (psi, psi+1) and
// increasing in m.  Written through the ratio c = Z(O(base))/Z(O_x) so the
// bracketing index can be jumped to directly instead of scanned.
struct ShiftedBundlePhases {
    double psi;
    double a;
    double b;  // b < 0 in the geometric regime
    std::int64_t base;

    double operator()(std::int64_t m) const {
        double u = -(a + static_cast<double>(m - base));
        return psi + std::atan2(-b, u) / std::numbers::pi;
    }

    // Approximate solution of f(m) = target.
    double invert(double target) const {
        double h = std::numbers::pi * (target - psi);
        double u = -b * std::cos(h) / std::sin(h);
        return static_cast<double>(base) - a - u;
    }
};

HeartDescriptor geometric_heart(const StabilityCondition& sc, double r) {
    const double eps = phase_epsilon();
    const double psi = torsion_phase(sc);

    double jreal = r - psi;
    auto jnear = static_cast<std::int64_t>(std::llround(jreal));
    if (std::abs(jreal - static_cast<double>(jnear)) <= eps) {
        return CohShift{jnear};
    }

    const auto j0 = static_cast<std::int64_t>(std::floor(jreal));
    const double target = r - static_cast<double>(j0);  // in (psi, psi+1)

    // The slices in (psi, psi+1) split as (psi, beta] from bundles below
    // the base and [alpha+1, psi+1) from bundles at or above it, with the
    // gap (beta, alpha+1) owned by the base pair itself.
    if (target >= sc.beta() && target < sc.alpha() + 1.0) {
        return HeartPair{1, sc.base_twist(), j0};
    }

    std::complex<double> c = charge_alpha(sc) / charge_point(sc);
    ShiftedBundlePhases f{psi, c.real(), c.imag(), sc.base_twist()};

    double guess = f.invert(target);
    if (std::abs(guess - static_cast<double>(sc.base_twist())) >
        static_cast<double>(kTwistScanCap)) {
        throw std::domain_error("heart search exceeded the twist scan cap (r too close to a "
                                "torsion ray)");
    }
    auto n = static_cast<std::int64_t>(std::floor(guess)) + 1;
    std::int64_t steps = 0;
    while (f(n - 1) > target) {
        --n;
        if (++steps > 64) throw std::logic_error("heart bracket failed to converge");
    }
    while (f(n) <= target) {
        ++n;
        if (++steps > 64) throw std::logic_error("heart bracket failed to converge");
    }
    return HeartPair{1, n, j0};
}

}  // namespace

HeartDescriptor heart_at(const StabilityCondition& sc, double r) {
    if (!std::isfinite(r)) throw std::invalid_argument("heart parameter must be finite");
    const double eps = phase_epsilon();
    switch (sc.regime()) {
        case Regime::geometric:
            return geometric_heart(sc, r);
        case Regime::wall: {
            auto j = static_cast<std::int64_t>(std::floor(r - sc.alpha()));
            if (sc.alpha() + static_cast<double>(j) <= r - 1.0 + eps) j += 1;
            return HeartPair{1, sc.base_twist(), j};
        }
        case Regime::quiver: {
            auto k1 = static_cast<std::int64_t>(std::floor(r - sc.alpha()));
            auto k2 = static_cast<std::int64_t>(std::floor(r - sc.beta() + 1.0));
            if (sc.alpha() + static_cast<double>(k1) <= r - 1.0 + eps) k1 += 1;
            if (sc.beta() + static_cast<double>(k2) - 1.0 <= r - 1.0 + eps) k2 += 1;
            std::int64_t p = checked_sub(k2, k1);
            if (p < 1) throw std::logic_error("quiver heart produced a non-positive gap");
            return HeartPair{p, sc.base_twist(), k1};
        }
    }
    throw std::logic_error("unreachable");
}

bool admits_slope_function(const HeartDescriptor& h) {
    return !std::holds_alternative<ExoticHeart>(h);
}

}  // namespace p1stab
