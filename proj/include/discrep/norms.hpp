#ifndef DISCREP_NORMS_HPP
#define DISCREP_NORMS_HPP

#include <span>
#include <vector>

#include "discrep/expansion.hpp"
#include "discrep/grid.hpp"

namespace discrep {

/// Exact L^p norm of a piecewise-constant grid function, p >= 1.
double lp_norm(const GridFunction& g, double p);

/// Exact essential supremum (max over cells of |value|).
double sup_norm(const GridFunction& g);

/// Generating function of an Orlicz space: convex, increasing, psi(0) = 0.
/// power(p): t^p.  exp_alpha(a): e^{t^a} - 1; for 0 < a < 1 that curve is
/// concave near zero, so it is replaced by its convex minorant (linear up to
/// the tangency point of the chord through the origin).  llogl(b):
/// t * ln^b(e + t).
class OrliczSpec {
public:
    enum class Kind { power, exp_alpha, llogl };

    static OrliczSpec power(double p);
    static OrliczSpec exp_alpha(double alpha);
    static OrliczSpec llogl(double beta);

    Kind kind() const { return kind_; }
    double parameter() const { return param_; }

    double psi(double t) const;
    double psi_inverse(double y) const;

private:
    OrliczSpec(Kind kind, double param);

    Kind kind_;
    double param_;
    double tangent_point_ = 0.0;  // exp_alpha with alpha < 1 only
    double tangent_slope_ = 0.0;
};

/// Luxemburg norm inf{K > 0 : integral psi(|g|/K) <= 1}, found by geometric
/// bisection to relative tolerance tol. Zero function gives 0.
double orlicz_norm(const GridFunction& g, const OrliczSpec& spec, double tol = 1e-10);

/// Same norm for a flat list of sampled values with equal cell weights.
double orlicz_norm_of_values(std::span<const double> values, double cell_volume,
                             const OrliczSpec& spec, double tol = 1e-10);

/// Exponential-integrability cross-check: max over a geometric p-ladder in
/// (1, pmax] of p^{-1/alpha} ||g||_p. Comparable to the exp(L^alpha) norm
/// within a fixed constant band.
double orlicz_exp_via_lp(const GridFunction& g, double alpha, double pmax);

/// One-parameter Haar series term: an interval with a coefficient block
/// (vector-valued coefficients allowed; scalar series use size-1 blocks).
struct HaarTerm1D {
    DyadicInterval interval;
    std::vector<double> coeffs;
};

/// Pointwise dyadic square function S(f) = [sum |a_I|^2 chi_I]^{1/2} of a
/// one-parameter Haar series, on the grid one level past the finest term.
GridFunction square_function(std::span<const HaarTerm1D> terms);

struct LpGrowthRow {
    double p;
    double norm;
    double ratio;  // norm / (p^{(d-1)/2} n^{(d-1)/2}), with n floored at 1
};

/// Exact L^p norms of a hyperbolic sum along a p-ladder, with the growth
/// ratio against p^{(d-1)/2} n^{(d-1)/2}.
std::vector<LpGrowthRow> lp_growth_probe(const HaarExpansion& e,
                                         std::span<const double> p_ladder);

}  // namespace discrep

#endif
