#include "vdpchain/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vdpchain::stats {

namespace {
// standard normal quantiles for the significance levels used here
double normal_quantile(double p) {
    if (p == 0.99) return 2.3263478740408408;
    if (p == 0.95) return 1.6448536269514722;
    if (p == 0.999) return 3.090232306167813;
    throw std::invalid_argument("unsupported quantile level");
}
}  // namespace

double chi_square_quantile(double p, unsigned dof) {
    double k = static_cast<double>(dof);
    double z = normal_quantile(p);
    double a = 2.0 / (9.0 * k);
    double inner = 1.0 - a + z * std::sqrt(a);
    return k * inner * inner * inner;
}

GofResult geometric_gof(const std::vector<std::uint64_t>& samples, double gamma,
                        double significance) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    if (gamma <= 0 || gamma >= 1) throw std::invalid_argument("gamma must be in (0,1)");
    const double n = static_cast<double>(samples.size());

    // last full bin k satisfies n*gamma*(1-gamma)^(k-1) >= 5; the tail takes the rest
    unsigned last_bin = 1;
    while (n * gamma * std::pow(1.0 - gamma, static_cast<double>(last_bin)) >= 5.0) ++last_bin;
    if (last_bin < 2) throw std::invalid_argument("too few samples for a geometric GOF");

    std::vector<double> observed(last_bin + 1, 0.0);
    for (std::uint64_t s : samples) {
        if (s == 0) throw std::invalid_argument("geometric samples start at 1");
        std::size_t idx = s <= last_bin ? s - 1 : last_bin;
        observed[idx] += 1.0;
    }
    double stat = 0;
    double tail_expected = n;
    for (unsigned k = 1; k <= last_bin; ++k) {
        double expected = n * gamma * std::pow(1.0 - gamma, static_cast<double>(k - 1));
        tail_expected -= expected;
        stat += (observed[k - 1] - expected) * (observed[k - 1] - expected) / expected;
    }
    stat += (observed[last_bin] - tail_expected) * (observed[last_bin] - tail_expected) / tail_expected;

    GofResult out;
    out.dof = last_bin;  // bins - 1, with bins = last_bin + 1
    out.statistic = stat;
    out.critical = chi_square_quantile(1.0 - significance, out.dof);
    out.pass = stat <= out.critical;
    return out;
}

GofResult uniform_gof(const std::vector<double>& samples, unsigned bins, double significance) {
    if (samples.empty() || bins < 2) throw std::invalid_argument("bad uniformity test input");
    std::vector<double> observed(bins, 0.0);
    for (double s : samples) {
        if (s < 0 || s >= 1) throw std::invalid_argument("samples must be in [0,1)");
        observed[static_cast<std::size_t>(s * bins)] += 1.0;
    }
    double expected = static_cast<double>(samples.size()) / bins;
    double stat = 0;
    for (double o : observed) stat += (o - expected) * (o - expected) / expected;
    GofResult out;
    out.dof = bins - 1;
    out.statistic = stat;
    out.critical = chi_square_quantile(1.0 - significance, out.dof);
    out.pass = stat <= out.critical;
    return out;
}

double binomial_sigma(double p, std::uint64_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean of empty vector");
    double acc = 0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of empty vector");
    std::sort(v.begin(), v.end());
    std::size_t mid = v.size() / 2;
    if (v.size() % 2 == 1) return v[mid];
    return 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace vdpchain::stats
