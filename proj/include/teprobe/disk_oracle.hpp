#pragma once

#include <vector>

namespace teprobe {

struct DiskSpec {
    double radius = 0.5;     // R
    double refraction = 16;  // n > 1
    int max_order = 2;       // scan orders m = 0..max_order
    double k_max = 7.0;

    void validate() const;  // throws std::invalid_argument
};

// Separation-of-variables determinant whose zeros are the transmission
// eigenvalues of the disk:
//   d_m(k) = sqrt(n) J_m(kR) J_{m-1}(sqrt(n) kR) - J_{m-1}(kR) J_m(sqrt(n) kR)
// (J_{-1} = -J_1). At R = 1/2, n = 16 this reduces to the classical
// J-product forms, up to an overall sign for m >= 1.
double disk_determinant(const DiskSpec& spec, int order, double k);

struct DiskRoot {
    int order;
    double k;
};

// Grid scan (step 1e-3) over each order up to max_order, bisection-refined
// to |dk| <= 1e-8, merged and sorted by k. Tangential (sign-preserving)
// zeros are outside detection scope.
std::vector<DiskRoot> find_disk_eigenvalues(const DiskSpec& spec);

}  // namespace teprobe
