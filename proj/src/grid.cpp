#include "discrep/grid.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace discrep {

GridFunction::GridFunction(std::vector<int> levels, double init, int level_budget)
    : levels_(std::move(levels)) {
    if (levels_.empty()) throw std::invalid_argument("grid needs dimension >= 1");
    int total = 0;
    for (int m : levels_) {
        if (m < 0) throw std::invalid_argument("grid levels must be nonnegative");
        total += m;
    }
    if (total > level_budget)
        throw std::length_error("grid resolution 2^" + std::to_string(total) +
                                " exceeds level budget 2^" + std::to_string(level_budget) +
                                "; raise the budget to proceed");
    values_.assign(std::size_t{1} << total, init);
}

double GridFunction::cell_volume() const {
    int total = 0;
    for (int m : levels_) total += m;
    return std::ldexp(1.0, -total);
}

std::size_t GridFunction::index_of(std::span<const std::uint64_t> cells) const {
    std::size_t flat = 0;
    for (int j = 0; j < dimension(); ++j) {
        assert(cells[j] < (std::uint64_t{1} << levels_[j]));
        flat = (flat << levels_[j]) | cells[j];
    }
    return flat;
}

std::vector<double> GridFunction::cell_center(std::size_t flat) const {
    std::vector<double> x(dimension());
    for (int j = dimension() - 1; j >= 0; --j) {
        std::uint64_t radix = std::uint64_t{1} << levels_[j];
        std::uint64_t c = flat & (radix - 1);
        flat >>= levels_[j];
        x[j] = std::ldexp(static_cast<double>(2 * c + 1), -levels_[j] - 1);
    }
    return x;
}

double GridFunction::integral() const { return cell_volume() * pairwise_sum(values_); }

GridFunction to_grid(const std::function<double(std::span<const double>)>& f,
                     std::vector<int> levels, int level_budget) {
    GridFunction g(std::move(levels), 0.0, level_budget);
    std::vector<double> x(g.dimension());
    for (std::size_t i = 0; i < g.cell_count(); ++i) {
        x = g.cell_center(i);
        g[i] = f(x);
#ifndef NDEBUG
        // The caller asserts f is constant per cell; spot-check a second point.
        std::vector<double> y = x;
        for (int j = 0; j < g.dimension(); ++j)
            y[j] += std::ldexp(1.0, -g.levels()[j] - 2);
        assert(f(y) == g[i] && "to_grid: function not constant on a grid cell");
#endif
    }
    return g;
}

namespace {

double pairwise_sum_rec(const double* xs, std::size_t n) {
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum_rec(xs, half) + pairwise_sum_rec(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
    return pairwise_sum_rec(xs.data(), xs.size());
}

}  // namespace discrep
