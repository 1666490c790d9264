#pragma once

#include <cstddef>
#include <vector>

#include "sh1d/basis.hpp"
#include "sh1d/physics.hpp"

namespace sh1d {

// Modal DG solution: per cell, kModes coefficients for each of the two
// conserved variables (depth h and discharge q). Mode 0 is the cell average.
class ModalField {
  public:
    ModalField() = default;
    explicit ModalField(int n_cells)
        : n_cells_(n_cells),
          h_(static_cast<std::size_t>(n_cells) * basis::kModes, 0.0),
          q_(static_cast<std::size_t>(n_cells) * basis::kModes, 0.0) {}

    int n_cells() const { return n_cells_; }
    int degree() const { return basis::kDegree; }

    double& h(int j, int mode) { return h_[idx(j, mode)]; }
    double h(int j, int mode) const { return h_[idx(j, mode)]; }
    double& q(int j, int mode) { return q_[idx(j, mode)]; }
    double q(int j, int mode) const { return q_[idx(j, mode)]; }

    double h_avg(int j) const { return h_[idx(j, 0)]; }
    double q_avg(int j) const { return q_[idx(j, 0)]; }

    /// State at local coordinate xi in [-1, 1] of cell j.
    ConservedState at(int j, double xi) const {
        const double p1 = xi;
        const double p2 = 0.5 * (3.0 * xi * xi - 1.0);
        return {h(j, 0) + h(j, 1) * p1 + h(j, 2) * p2,
                q(j, 0) + q(j, 1) * p1 + q(j, 2) * p2};
    }

    /// Trace at the cell's own right interface (phi_m = 1 for all m).
    ConservedState edge_right(int j) const {
        return {h(j, 0) + h(j, 1) + h(j, 2), q(j, 0) + q(j, 1) + q(j, 2)};
    }

    /// Trace at the cell's own left interface (phi_m = (-1)^m).
    ConservedState edge_left(int j) const {
        return {h(j, 0) - h(j, 1) + h(j, 2), q(j, 0) - q(j, 1) + q(j, 2)};
    }

    void zero_q_modes(int j) {
        for (int m = 0; m < basis::kModes; ++m) q_[idx(j, m)] = 0.0;
    }

    std::vector<double>& h_data() { return h_; }
    const std::vector<double>& h_data() const { return h_; }
    std::vector<double>& q_data() { return q_; }
    const std::vector<double>& q_data() const { return q_; }

    bool same_shape(const ModalField& other) const {
        return n_cells_ == other.n_cells_;
    }

  private:
    std::size_t idx(int j, int mode) const {
        return static_cast<std::size_t>(j) * basis::kModes + mode;
    }

    int n_cells_ = 0;
    std::vector<double> h_;
    std::vector<double> q_;
};

/// out = x + s*y, coefficient-wise.
inline void add_scaled(const ModalField& x, double s, const ModalField& y,
                       ModalField& out) {
    const auto& xh = x.h_data();
    const auto& xq = x.q_data();
    const auto& yh = y.h_data();
    const auto& yq = y.q_data();
    auto& oh = out.h_data();
    auto& oq = out.q_data();
    for (std::size_t i = 0; i < xh.size(); ++i) {
        oh[i] = xh[i] + s * yh[i];
        oq[i] = xq[i] + s * yq[i];
    }
}

}  // namespace sh1d
