#include "layerkit/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace layerkit {

Mesh1D Mesh1D::from_nodes(std::vector<double> nodes) {
    if (nodes.size() < 3) {
        throw std::invalid_argument("Mesh1D: need at least 2 subintervals");
    }
    if (nodes.front() != 0.0 || nodes.back() != 1.0) {
        throw std::invalid_argument("Mesh1D: endpoints must be exactly 0 and 1");
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i] > nodes[i - 1]) || !std::isfinite(nodes[i])) {
            throw std::invalid_argument("Mesh1D: nodes must be finite and strictly increasing");
        }
    }
    return Mesh1D(std::move(nodes));
}

Mesh1D Mesh1D::uniform(int n_intervals) {
    if (n_intervals < 2) {
        throw std::invalid_argument("Mesh1D::uniform: need at least 2 subintervals");
    }
    std::vector<double> nodes(static_cast<std::size_t>(n_intervals) + 1);
    for (int i = 0; i <= n_intervals; ++i) {
        nodes[static_cast<std::size_t>(i)] = static_cast<double>(i) / n_intervals;
    }
    nodes.front() = 0.0;
    nodes.back() = 1.0;
    return Mesh1D(std::move(nodes));
}

std::vector<double> Mesh1D::steps() const {
    std::vector<double> h(nodes_.size() - 1);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        h[i - 1] = nodes_[i] - nodes_[i - 1];
    }
    return h;
}

double Mesh1D::min_step() const {
    double m = nodes_[1] - nodes_[0];
    for (std::size_t i = 2; i < nodes_.size(); ++i) {
        m = std::min(m, nodes_[i] - nodes_[i - 1]);
    }
    return m;
}

double Mesh1D::max_step() const {
    double m = nodes_[1] - nodes_[0];
    for (std::size_t i = 2; i < nodes_.size(); ++i) {
        m = std::max(m, nodes_[i] - nodes_[i - 1]);
    }
    return m;
}

} // namespace layerkit
