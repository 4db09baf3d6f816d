#ifndef GCG_PARAMS_HPP
#define GCG_PARAMS_HPP

#include <cmath>
#include <stdexcept>

namespace gcg {

/// Strategy constants derived from (n, d, alpha). Everything is recomputed
/// from the three inputs; thresholds like beta/2 stay real-valued and are
/// compared with >=.
struct ParameterSet {
    int n = 0;
    double d = 0;        // average degree
    double alpha = 0;
    double p = 0;        // d/n
    double b = 0;        // 1/(1-p)
    double degree_ratio = 0; // d / ln d
    int k = 0;           // ceil(alpha * d / ln d)
    double beta = 0;     // alpha * d^{1-1/alpha} / ln d
    double gamma = 0;    // 16 ln^2 d / (alpha * d^{1-1/alpha})
    double theta_lower = 0; // 7*alpha/8, the mirroring round budget

    // mirroring-strategy accounting constants
    static constexpr double mirror_beta = 0.5;
    static constexpr double mirror_gamma = 0.75;
};

inline ParameterSet derive_parameters(int n, double d, double alpha) {
    if (!(d > std::exp(1.0))) throw std::invalid_argument("derive_parameters: need d > e");
    if (!(alpha > 0)) throw std::invalid_argument("derive_parameters: need alpha > 0");
    ParameterSet ps;
    ps.n = n;
    ps.d = d;
    ps.alpha = alpha;
    ps.p = d / n;
    ps.b = 1.0 / (1.0 - ps.p);
    const double ld = std::log(d);
    ps.degree_ratio = d / ld;
    ps.k = static_cast<int>(std::ceil(alpha * d / ld));
    ps.beta = alpha * std::pow(d, 1.0 - 1.0 / alpha) / ld;
    ps.gamma = 16.0 * ld * ld / (alpha * std::pow(d, 1.0 - 1.0 / alpha));
    ps.theta_lower = 7.0 * alpha / 8.0;
    return ps;
}

} // namespace gcg

#endif
