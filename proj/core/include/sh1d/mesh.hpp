#pragma once

#include <vector>

namespace sh1d {

// Partition of [0, L] into cells. Built uniform; centers and widths are
// stored per cell so a graded mesh fits the same type.
struct Mesh {
    double length = 0.0;
    std::vector<double> centers;
    std::vector<double> widths;

    static Mesh uniform(double length, int n_cells) {
        Mesh m;
        m.length = length;
        m.centers.resize(n_cells);
        m.widths.resize(n_cells);
        const double dx = length / n_cells;
        for (int j = 0; j < n_cells; ++j) {
            m.centers[j] = (j + 0.5) * dx;
            m.widths[j] = dx;
        }
        return m;
    }

    int n_cells() const { return static_cast<int>(centers.size()); }
    double left_edge(int j) const { return centers[j] - 0.5 * widths[j]; }
    double right_edge(int j) const { return centers[j] + 0.5 * widths[j]; }
};

}  // namespace sh1d
