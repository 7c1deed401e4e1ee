#pragma once

#include <cstdint>
#include <vector>

namespace vdpchain::stats {

// Wilson-Hilferty approximation; accurate to ~0.1% for dof >= 20
double chi_square_quantile(double p, unsigned dof);

struct GofResult {
    double statistic = 0;
    double critical = 0;
    unsigned dof = 0;
    bool pass = false;
};

// chi-square goodness of fit of positive integer samples against Geometric(gamma),
// support {1, 2, ...}; bins are collapsed so every expected count is >= 5
GofResult geometric_gof(const std::vector<std::uint64_t>& samples, double gamma,
                        double significance);

// chi-square uniformity test of values in [0,1) over equal-width bins
GofResult uniform_gof(const std::vector<double>& samples, unsigned bins, double significance);

double binomial_sigma(double p, std::uint64_t n);

double mean(const std::vector<double>& v);
double median(std::vector<double> v);

}  // namespace vdpchain::stats
