#ifndef DISCREP_EXPANSION_HPP
#define DISCREP_EXPANSION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "discrep/dyadic.hpp"
#include "discrep/grid.hpp"

namespace discrep {

/// Exact count of dyadic boxes of volume 2^-n in dimension d:
/// C(n+d-1, d-1) * 2^n. Throws on 64-bit overflow.
std::uint64_t count_rectangles(int n, int d);

/// Coefficients over one partition family D_r, keyed by row-major position.
/// Sparse until more than half the positions are set, then dense.
class ShapeCoefficients {
public:
    ShapeCoefficients() = default;
    explicit ShapeCoefficients(ShapeVector shape);

    const ShapeVector& shape() const { return shape_; }
    std::uint64_t position_count() const { return count_; }

    void set(std::uint64_t pos, double value);
    double at(std::uint64_t pos) const;

    /// Visit nonzero entries in increasing position order.
    void for_each(const std::function<void(std::uint64_t, double)>& fn) const;

    double sum_abs() const;
    double sum_squares() const;

private:
    void promote();

    ShapeVector shape_;
    std::uint64_t count_ = 0;
    bool dense_ = false;
    std::vector<double> dense_values_;
    std::unordered_map<std::uint64_t, double> sparse_values_;
};

/// Haar series over rectangles of volume 2^-n (all shapes |r| = n), with an
/// optional coarse part over |r| < n for sums over volume >= 2^-n.
class HaarExpansion {
public:
    HaarExpansion(int d, int n, bool allow_coarse = false);

    int dimension() const { return d_; }
    int scale() const { return n_; }
    bool allows_coarse() const { return allow_coarse_; }

    void set(const ShapeVector& shape, std::uint64_t pos, double value);
    double at(const ShapeVector& shape, std::uint64_t pos) const;

    /// Shapes holding coefficients, lexicographic.
    const std::map<ShapeVector, ShapeCoefficients>& shapes() const { return shapes_; }

    void for_each_nonzero(
        const std::function<void(const ShapeVector&, std::uint64_t, double)>& fn) const;

    double sum_abs() const;
    double sum_squares() const;
    std::uint64_t nonzero_count() const;

private:
    int d_;
    int n_;
    bool allow_coarse_;
    std::map<ShapeVector, ShapeCoefficients> shapes_;
};

/// Add w * h_R to a grid for R = (shape, position). Requires per-axis grid
/// levels m_j >= r_j + 1 so h_R is constant on cells.
void add_haar_to_grid(GridFunction& g, const ShapeVector& shape,
                      std::uint64_t position, double w);

/// Add a whole coefficient family to a grid.
void add_shape_to_grid(GridFunction& g, const ShapeCoefficients& coeffs,
                       double scale = 1.0);

/// Exact evaluation of the series on the grid refined one level past the
/// finest rectangle side per axis (resolution n+1 per axis by default).
GridFunction expansion_to_grid(const HaarExpansion& e,
                               int level_budget = kDefaultLevelBudget);

/// Signed Haar sum over one partition family: f_r = sum eps_R h_R with
/// eps in {-1,0,+1}. With no zero signs |f_r| = 1 almost everywhere.
struct RFunction {
    ShapeVector shape;
    std::vector<std::int8_t> signs;

    RFunction() = default;
    RFunction(ShapeVector shape_, std::vector<std::int8_t> signs_);

    bool full() const;  // no zero signs
    GridFunction grid(int level_budget = kDefaultLevelBudget) const;
    void add_to_grid(GridFunction& g, double scale = 1.0) const;
};

/// JSON round trip: {"d":..., "n":..., "entries":[{"shape":[...],
/// "position":[...], "value":...}]}.
std::string expansion_to_json(const HaarExpansion& e);
HaarExpansion expansion_from_json(const std::string& text);

}  // namespace discrep

#endif
