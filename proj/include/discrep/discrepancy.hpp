#ifndef DISCREP_DISCREPANCY_HPP
#define DISCREP_DISCREPANCY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "discrep/dyadic.hpp"
#include "discrep/expansion.hpp"
#include "discrep/grid.hpp"
#include "discrep/norms.hpp"
#include "discrep/pointset.hpp"

namespace discrep {

/// The counting discrepancy of a point set: D(x) = #(P in [0,x)) - N |[0,x)|
/// with strict coordinatewise membership. Immutable and read-only.
class DiscrepancyField {
public:
    explicit DiscrepancyField(PointSet points);

    const PointSet& points() const { return points_; }
    int dimension() const { return points_.dimension(); }
    int size() const { return points_.size(); }

    /// Pointwise value; x may touch the closed boundary (x_j = 1 allowed).
    double eval(std::span<const double> x) const;

    struct StarResult {
        double value = 0.0;
        std::vector<double> witness;
        bool closed = false;  // true if the closed-box count attained the sup
    };

    /// Exact sup-norm over the closed cube, taking one-sided limits at the
    /// jump set: the maximum over the critical grid of both the open-count
    /// deficiency N|[0,x)| - A(x) and the closed-count excess A+(x) - N|[0,x)|.
    /// Guarded by size caps (4096 in d=2, 64 in d=3 by default).
    StarResult star_discrepancy_exact(bool override_budget = false) const;

    /// Exact L2 norm by the pairwise closed form
    ///   int D^2 = sum_{p,q} prod_j (1 - max(p_j,q_j))
    ///           - 2N sum_p prod_j (1 - p_j^2)/2 + N^2 3^{-d}.
    double l2_norm_exact() const;

    /// Exact <D, h_R>: each point contributes prod_j A(p_j, R_j) where
    /// A(t, I) is the integral of h_I over (t, 1] (a tent over I), and the
    /// volume part contributes -N prod_j |R_j|^2 / 4.
    double haar_coefficient(const DyadicRectangle& R) const;

    /// Sign-optimal r-function for the family D_r: eps_R = sgn <D, h_R>, so
    /// the pairing <D, f_r> equals the sum of absolute Haar coefficients.
    std::pair<RFunction, double> lemma1_rfunction(const ShapeVector& r) const;

    /// Midpoint values of D on the uniform dyadic grid with per-axis
    /// resolution 2^-m (exact at midpoints via prefix-summed counts).
    GridFunction sample_grid(int m) const;

    struct SampledNorm {
        double value = 0.0;
        double error = 0.0;
    };

    /// Stratified estimate of ||D||_p from the midpoint grid, with a
    /// deterministic error bound from the within-cell variation of the
    /// volume term (plus a crossing allowance when points are not grid
    /// aligned).
    SampledNorm lp_norm_sampled(double p, int m) const;

    struct McEstimate {
        double mean = 0.0;  // estimate of int |D|^p
        double se = 0.0;    // standard error of the mean
        double norm = 0.0;  // mean^{1/p}
    };

    /// Plain Monte Carlo estimate of int |D|^p, deterministic per seed.
    McEstimate lp_integral_mc(double p, std::uint64_t samples, std::uint64_t seed) const;

    /// Orlicz norm of the midpoint-sampled field.
    double orlicz_norm_sampled(const OrliczSpec& spec, int m, double tol = 1e-10) const;

    /// Exact <D, g> against a piecewise-constant grid function (d = 2).
    /// Counting and volume parts are integrated in closed form per cell,
    /// including the partial strips of points interior to a grid column/row.
    double pair_with_grid(const GridFunction& g) const;

private:
    PointSet points_;
};

}  // namespace discrep

#endif
