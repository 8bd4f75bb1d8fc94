#include "teprobe/disk_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "teprobe/special_functions.hpp"

namespace teprobe {

void DiskSpec::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
    if (!(refraction > 1.0))
        throw std::invalid_argument("refraction index must exceed 1");
    if (max_order < 0 || max_order > 19)
        throw std::invalid_argument("max_order must lie in [0, 19]");
    if (!(k_max > 0.0)) throw std::invalid_argument("k_max must be positive");
}

double disk_determinant(const DiskSpec& spec, int order, double k) {
    spec.validate();
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    if (!(k > 0.0)) throw std::invalid_argument("k must be positive");
    const double s = std::sqrt(spec.refraction);
    const double a = k * spec.radius;
    const double b = s * k * spec.radius;
    // J_{-1} = -J_1
    const double jm1a = order == 0 ? -bessel_j(1, a) : bessel_j(order - 1, a);
    const double jm1b = order == 0 ? -bessel_j(1, b) : bessel_j(order - 1, b);
    return s * bessel_j(order, a) * jm1b - jm1a * bessel_j(order, b);
}

std::vector<DiskRoot> find_disk_eigenvalues(const DiskSpec& spec) {
    spec.validate();
    constexpr double kGridStep = 1e-3;
    constexpr double kBisectTol = 1e-8;
    std::vector<DiskRoot> roots;
    for (int m = 0; m <= spec.max_order; ++m) {
        double k0 = kGridStep;
        double f0 = disk_determinant(spec, m, k0);
        for (double k1 = 2.0 * kGridStep; k1 <= spec.k_max + 0.5 * kGridStep;
             k1 += kGridStep) {
            const double f1 = disk_determinant(spec, m, k1);
            if (f0 == 0.0) {
                roots.push_back({m, k0});
            } else if (f0 * f1 < 0.0) {
                double lo = k0, hi = k1, flo = f0;
                while (hi - lo > kBisectTol) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = disk_determinant(spec, m, mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (flo * fm < 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                roots.push_back({m, 0.5 * (lo + hi)});
            }
            k0 = k1;
            f0 = f1;
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const DiskRoot& a, const DiskRoot& b) { return a.k < b.k; });
    return roots;
}

}  // namespace teprobe
