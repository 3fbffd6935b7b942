#include "p1stab/cells.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "p1stab/config.hpp"
#include "p1stab/group_actions.hpp"

namespace p1stab {

std::string to_string(const CellLabel& label) {
    struct Printer {
        std::string operator()(const CellS& c) const { return "S(" + std::to_string(c.j) + ")"; }
        std::string operator()(const CellSMinus& c) const {
            return "SMinus(" + std::to_string(c.p) + "," + std::to_string(c.i) + "," +
                   std::to_string(c.j) + ")";
        }
        std::string operator()(const CellSPlus& c) const {
            return "SPlus(" + std::to_string(c.p) + "," + std::to_string(c.i) + "," +
                   std::to_string(c.j) + ")";
        }
        std::string operator()(const CellWall& c) const {
            return "Wall(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
        }
        std::string operator()(const CellLine& c) const {
            return "Line(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
        }
    };
    return std::visit(Printer{}, label);
}

bool is_four_cell(const CellLabel& label) {
    return std::holds_alternative<CellSMinus>(label) || std::holds_alternative<CellSPlus>(label);
}

CellLabel cell_of(const StabilityCondition& sc) {
    const double eps = phase_epsilon();
    switch (sc.regime()) {
        case Regime::geometric: {
            double psi = torsion_phase(sc);
            double jreal = 1.0 - psi;
            auto j = static_cast<std::int64_t>(std::llround(jreal));
            if (std::abs(jreal - static_cast<double>(j)) <= eps) return CellS{j};
            auto heart = std::get<HeartPair>(heart_at(sc, 1.0));
            return CellSMinus{1, heart.i, heart.j};
        }
        case Regime::wall: {
            auto heart = std::get<HeartPair>(heart_at(sc, 1.0));
            double phi = sc.alpha() + static_cast<double>(heart.j);
            if (std::abs(phi - 1.0) <= eps) return CellLine{heart.i, heart.j};
            return CellWall{heart.i, heart.j};
        }
        case Regime::quiver: {
            auto heart = std::get<HeartPair>(heart_at(sc, 1.0));
            double phi_top = sc.alpha() + static_cast<double>(heart.j);
            double phi_bottom = sc.beta() + static_cast<double>(heart.p + heart.j) - 1.0;
            if (phi_bottom > phi_top + eps) return CellSMinus{heart.p, heart.i, heart.j};
            if (phi_bottom < phi_top - eps) return CellSPlus{heart.p, heart.i, heart.j};
            // Equal phases with p >= 2 (integer phase gap): the seam of the
            // closed cells; classified with the >= side.
            return CellSMinus{heart.p, heart.i, heart.j};
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<CellLabel> neighbors(const CellLabel& label) {
    if (const auto* m = std::get_if<CellSMinus>(&label)) {
        if (m->p == 1) {
            return {CellLabel{CellSMinus{1, m->i + 1, m->j}},
                    CellLabel{CellSMinus{1, m->i - 1, m->j}},
                    CellLabel{CellSPlus{1, m->i, m->j}}};
        }
        return {CellLabel{CellSPlus{m->p, m->i, m->j}},
                CellLabel{CellSPlus{m->p - 1, m->i, m->j + 1}},
                CellLabel{CellSPlus{m->p - 1, m->i, m->j}}};
    }
    if (const auto* p = std::get_if<CellSPlus>(&label)) {
        return {CellLabel{CellSMinus{p->p, p->i, p->j}},
                CellLabel{CellSMinus{p->p + 1, p->i, p->j - 1}},
                CellLabel{CellSMinus{p->p + 1, p->i, p->j}}};
    }
    throw std::invalid_argument("neighbors are defined for the four-cells only: " +
                                to_string(label));
}

namespace {

struct PathParams {
    std::int64_t base;
    double alpha0, beta0, lma0, lmb0;
    double alpha1, beta1, lma1, lmb1;

    StabilityCondition at(double t) const {
        double alpha = std::lerp(alpha0, alpha1, t);
        double beta = std::lerp(beta0, beta1, t);
        try {
            return StabilityCondition(base, alpha, beta, std::lerp(lma0, lma1, t),
                                      std::lerp(lmb0, lmb1, t));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("path leaves the chart (alpha <= beta - 1) at t = " +
                                        std::to_string(t));
        }
    }
};

// Finds torsion-ray crossings psi(t) = integer strictly between two
// geometric samples by bisecting the continuous lift.
void insert_torsion_crossings(const PathParams& path, double t0, double t1,
                              std::vector<PathSample>& extra) {
    StabilityCondition a = path.at(t0), b = path.at(t1);
    if (a.regime() != Regime::geometric || b.regime() != Regime::geometric) return;
    double p0 = torsion_phase(a), p1 = torsion_phase(b);
    double lo = std::min(p0, p1), hi = std::max(p0, p1);
    for (auto m = static_cast<std::int64_t>(std::ceil(lo)); m < hi; ++m) {
        if (static_cast<double>(m) <= lo) continue;
        double u0 = t0, u1 = t1;
        double v0 = p0 - static_cast<double>(m);
        for (int iter = 0; iter < 80; ++iter) {
            double um = 0.5 * (u0 + u1);
            StabilityCondition mid = path.at(um);
            if (mid.regime() != Regime::geometric) break;
            double vm = torsion_phase(mid) - static_cast<double>(m);
            if (std::abs(vm) <= 0.5 * phase_epsilon()) {
                extra.push_back({um, cell_of(mid)});
                break;
            }
            if ((vm > 0) == (v0 > 0)) {
                u0 = um;
                v0 = vm;
            } else {
                u1 = um;
            }
        }
    }
}

}  // namespace

std::vector<PathSample> scan_path(const StabilityCondition& from, const StabilityCondition& to,
                                  int steps) {
    if (steps < 2) throw std::invalid_argument("scan_path needs at least 2 steps");
    StabilityCondition target = to;
    if (to.base_twist() != from.base_twist()) {
        target = rebase(to, from.base_twist());
    }
    PathParams path{from.base_twist(), from.alpha(),   from.beta(),   from.log_m_alpha(),
                    from.log_m_beta(), target.alpha(), target.beta(), target.log_m_alpha(),
                    target.log_m_beta()};

    std::vector<PathSample> samples;
    samples.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        samples.push_back({t, cell_of(path.at(t))});
    }

    std::vector<PathSample> extra;
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
        if (samples[k].cell == samples[k + 1].cell) continue;
        double t0 = samples[k].t, t1 = samples[k + 1].t;
        // The phase gap alpha - beta is linear in t, so a wall crossing
        // can be sampled at its exact root.
        double d0 = std::lerp(path.alpha0 - path.beta0, path.alpha1 - path.beta1, t0);
        double d1 = std::lerp(path.alpha0 - path.beta0, path.alpha1 - path.beta1, t1);
        if ((d0 > 0) != (d1 > 0) && std::abs(d0) > phase_epsilon() &&
            std::abs(d1) > phase_epsilon()) {
            double tw = t0 + (t1 - t0) * (d0 / (d0 - d1));
            extra.push_back({tw, cell_of(path.at(tw))});
        }
        insert_torsion_crossings(path, t0, t1, extra);
    }
    samples.insert(samples.end(), extra.begin(), extra.end());
    std::sort(samples.begin(), samples.end(),
              [](const PathSample& a, const PathSample& b) { return a.t < b.t; });
    return samples;
}

}  // namespace p1stab
