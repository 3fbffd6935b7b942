#include "p1stab/derived_hom.hpp"

#include <algorithm>

namespace p1stab {

namespace {

// Sheaf-level table; t already adjusted for shifts.
std::int64_t sheaf_hom(const Indecomposable& a, const Indecomposable& b, std::int64_t t) {
    if (t != 0 && t != 1) return 0;
    const auto* la = std::get_if<LineBundle>(&a);
    const auto* lb = std::get_if<LineBundle>(&b);
    if (la && lb) {
        std::int64_t d = checked_sub(lb->twist, la->twist);
        return t == 0 ? std::max<std::int64_t>(d + 1, 0) : std::max<std::int64_t>(-d - 1, 0);
    }
    if (la) {
        const auto& tb = std::get<Torsion>(b);
        return t == 0 ? tb.length : 0;
    }
    const auto& ta = std::get<Torsion>(a);
    if (lb) {
        return t == 0 ? 0 : ta.length;
    }
    const auto& tb = std::get<Torsion>(b);
    return ta.point == tb.point ? std::min(ta.length, tb.length) : 0;
}

}  // namespace

std::int64_t hom_dim(const Indecomposable& a, const Indecomposable& b, std::int64_t t) {
    return sheaf_hom(a, b, checked_add(t, checked_sub(shift_of(b), shift_of(a))));
}

std::int64_t hom_dim(const DecomposedObject& x, const DecomposedObject& y, std::int64_t t) {
    std::int64_t total = 0;
    for (const auto& sx : x.summands()) {
        for (const auto& sy : y.summands()) {
            std::int64_t d = hom_dim(sx.part, sy.part, t);
            total = checked_add(total,
                                checked_mul(checked_mul(sx.multiplicity, sy.multiplicity), d));
        }
    }
    return total;
}

}  // namespace p1stab
