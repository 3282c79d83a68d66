#include "layerkit/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace layerkit {

MonitorFn bakhvalov_monitor(double k_tilde, double eps, double gamma, double mu) {
    if (eps <= 0.0 || gamma <= 0.0 || mu <= 0.0 || k_tilde <= 0.0) {
        throw std::domain_error("bakhvalov_monitor: parameters must be positive");
    }
    return MonitorFn{[=](double s) {
        return std::max(1.0, k_tilde * gamma / eps * std::exp(-gamma * s / (mu * eps)));
    }};
}

} // namespace layerkit
