#include "feltloom/rng.hpp"

#include <cmath>

namespace feltloom {

double SplitMix64::next_gaussian() {
    // Box-Muller; u1 is kept away from 0 so the log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace feltloom
