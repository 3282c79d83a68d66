#pragma once

#include <span>
#include <vector>

namespace layerkit {

/// A partition of [0,1]: strictly increasing nodes x_0 = 0 < x_1 < ... < x_N = 1.
///
/// Steps are 1-based to match the usual h_i = x_i - x_{i-1} convention.
/// Instances are immutable after construction and safe to share across threads.
class Mesh1D {
public:
    /// Validates and takes ownership of a node vector.
    /// Throws std::invalid_argument when the endpoints are not pinned to
    /// {0,1}, the nodes are not strictly increasing, or N < 2.
    static Mesh1D from_nodes(std::vector<double> nodes);

    static Mesh1D uniform(int n_intervals);

    int intervals() const { return static_cast<int>(nodes_.size()) - 1; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

    /// h_i for i in 1..N.
    double step(int i) const {
        return nodes_[static_cast<std::size_t>(i)] - nodes_[static_cast<std::size_t>(i - 1)];
    }

    std::span<const double> nodes() const { return nodes_; }
    std::vector<double> steps() const;

    double min_step() const;
    double max_step() const;

    bool operator==(const Mesh1D&) const = default;

private:
    explicit Mesh1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {}
    std::vector<double> nodes_;
};

} // namespace layerkit
