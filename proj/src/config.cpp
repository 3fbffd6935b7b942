#include "p1stab/config.hpp"

#include <stdexcept>

namespace p1stab {

namespace {
double g_phase_epsilon = 1e-9;
}

double phase_epsilon() { return g_phase_epsilon; }

void set_phase_epsilon(double eps) {
    if (!(eps > 0.0) || !(eps < 0.1)) {
        throw std::invalid_argument("phase epsilon must lie in (0, 0.1)");
    }
    g_phase_epsilon = eps;
}

}  // namespace p1stab
