#include "parsched/numeric.hpp"

#include <cstdlib>

namespace parsched {

double tolerance() {
    static const double tol = [] {
        if (const char* env = std::getenv("SCHED_TOL")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0.0 && std::isfinite(v)) return v;
        }
        return 1e-9;
    }();
    return tol;
}

} // namespace parsched
