#ifndef DISCREP_GRID_HPP
#define DISCREP_GRID_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace discrep {

/// Default cap on the total grid refinement (sum of per-axis levels).
/// 2^26 cells keeps every exact computation comfortably in memory.
inline constexpr int kDefaultLevelBudget = 26;

/// Exact piecewise-constant function on a dyadic grid: per-axis resolution
/// levels m = (m_1,...,m_d), one value per cell of side 2^-m_j, row-major.
class GridFunction {
public:
    GridFunction(std::vector<int> levels, double init = 0.0,
                 int level_budget = kDefaultLevelBudget);

    int dimension() const { return static_cast<int>(levels_.size()); }
    const std::vector<int>& levels() const { return levels_; }
    std::size_t cell_count() const { return values_.size(); }
    double cell_volume() const;

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Row-major flat index of the cell with per-axis indices c.
    std::size_t index_of(std::span<const std::uint64_t> cells) const;
    /// Center of the flat-indexed cell.
    std::vector<double> cell_center(std::size_t flat) const;

    /// Exact integral over the unit cube: cell volume times the value sum.
    double integral() const;

    bool same_layout(const GridFunction& other) const { return levels_ == other.levels_; }

private:
    std::vector<int> levels_;
    std::vector<double> values_;
};

/// Sample a function that is constant on every cell of the target grid.
/// Values are cell-center evaluations, hence exact for such functions
/// (verified per cell in debug builds by sampling a second point).
GridFunction to_grid(const std::function<double(std::span<const double>)>& f,
                     std::vector<int> levels,
                     int level_budget = kDefaultLevelBudget);

/// Deterministic blocked-pairwise sum; the reduction tree depends only on
/// the length, so results are bit-stable regardless of threading upstream.
double pairwise_sum(std::span<const double> xs);

}  // namespace discrep

#endif
