#include "p1stab/group_actions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "p1stab/config.hpp"

namespace p1stab {

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    return {g1.z + g2.z, checked_add(g1.tensor, g2.tensor)};
}

GroupElement inverse(const GroupElement& g) { return {-g.z, checked_sub(0, g.tensor)}; }

StabilityCondition act(const GroupElement& g, const StabilityCondition& sc) {
    double rot = g.z.imag() / std::numbers::pi;
    return StabilityCondition(checked_add(sc.base_twist(), g.tensor), sc.alpha() + rot,
                              sc.beta() + rot, sc.log_m_alpha() + g.z.real(),
                              sc.log_m_beta() + g.z.real());
}

StabilityCondition rebase(const StabilityCondition& sc, std::int64_t i_new) {
    if (i_new == sc.base_twist()) return sc;
    if (sc.regime() == Regime::quiver) {
        throw std::domain_error("cannot rebase a quiver-regime condition: only O(i-1), O(i) "
                                "are semistable");
    }
    if (sc.regime() == Regime::wall) {
        // Every bundle is semistable here, but the rebased pair would have
        // a phase gap of exactly one, which the chart excludes.
        throw std::domain_error("cannot rebase a wall condition away from its base twist");
    }
    double alpha_new = phase_of(sc, LineBundle{i_new, 0});
    double beta_new = phase_of(sc, LineBundle{i_new - 1, 1});
    double lm_alpha = std::log(std::abs(central_charge(sc, KClass{1, i_new})));
    double lm_beta = std::log(std::abs(central_charge(sc, KClass{1, i_new - 1})));
    return StabilityCondition(i_new, alpha_new, beta_new, lm_alpha, lm_beta);
}

namespace {

bool params_close(const StabilityCondition& a, const StabilityCondition& b) {
    const double eps = phase_epsilon();
    return std::abs(a.alpha() - b.alpha()) <= eps && std::abs(a.beta() - b.beta()) <= eps &&
           std::abs(a.log_m_alpha() - b.log_m_alpha()) <= eps &&
           std::abs(a.log_m_beta() - b.log_m_beta()) <= eps;
}

}  // namespace

bool equivalent(const StabilityCondition& sc1, const StabilityCondition& sc2) {
    if (sc1.regime() != sc2.regime()) return false;
    if (sc1.regime() == Regime::geometric) {
        return params_close(sc1, rebase(sc2, sc1.base_twist()));
    }
    // Wall and quiver conditions at distinct bases have distinct
    // semistable sets, so the bases must match on the nose.
    if (sc1.base_twist() != sc2.base_twist()) return false;
    return params_close(sc1, sc2);
}

}  // namespace p1stab
