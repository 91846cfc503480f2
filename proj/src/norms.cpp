#include "discrep/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace discrep {

double lp_norm(const GridFunction& g, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: need p >= 1");
    std::vector<double> powers(g.cell_count());
    const auto vals = g.values();
    if (p == 2.0) {
        for (std::size_t i = 0; i < vals.size(); ++i) powers[i] = vals[i] * vals[i];
    } else {
        for (std::size_t i = 0; i < vals.size(); ++i)
            powers[i] = std::pow(std::fabs(vals[i]), p);
    }
    return std::pow(g.cell_volume() * pairwise_sum(powers), 1.0 / p);
}

double sup_norm(const GridFunction& g) {
    double m = 0.0;
    for (double v : g.values()) m = std::max(m, std::fabs(v));
    return m;
}

OrliczSpec OrliczSpec::power(double p) {
    if (p < 1.0) throw std::invalid_argument("orlicz power spec: need p >= 1");
    return OrliczSpec(Kind::power, p);
}

OrliczSpec OrliczSpec::exp_alpha(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("orlicz exp spec: need alpha > 0");
    return OrliczSpec(Kind::exp_alpha, alpha);
}

OrliczSpec OrliczSpec::llogl(double beta) {
    if (beta <= 0.0) throw std::invalid_argument("orlicz llogl spec: need beta > 0");
    return OrliczSpec(Kind::llogl, beta);
}

OrliczSpec::OrliczSpec(Kind kind, double param) : kind_(kind), param_(param) {
    if (kind_ == Kind::exp_alpha && param_ < 1.0) {
        // e^{t^a} - 1 is concave below t0 = (1/a - 1)^{1/a}. The convex
        // minorant replaces it by the chord from the origin up to the point
        // t* where the chord is tangent: 1 - e^{-u} = a u with u = t*^a.
        double a = param_;
        double lo = 0.0, hi = 1.0 / a;  // g(u) = 1 - e^{-u} - a u, g(1/a) < 0
        for (int i = 0; i < 200; ++i) {
            double mid = 0.5 * (lo + hi);
            (1.0 - std::exp(-mid) - a * mid > 0.0 ? lo : hi) = mid;
        }
        double u = 0.5 * (lo + hi);
        tangent_point_ = std::pow(u, 1.0 / a);
        tangent_slope_ = std::expm1(u) / tangent_point_;
    }
}

double OrliczSpec::psi(double t) const {
    switch (kind_) {
        case Kind::power:
            return std::pow(t, param_);
        case Kind::exp_alpha:
            if (param_ < 1.0 && t < tangent_point_) return tangent_slope_ * t;
            return std::expm1(std::pow(t, param_));
        case Kind::llogl:
            return t * std::pow(std::log(std::exp(1.0) + t), param_);
    }
    return 0.0;
}

double OrliczSpec::psi_inverse(double y) const {
    if (y < 0.0) throw std::invalid_argument("psi_inverse: need y >= 0");
    if (y == 0.0) return 0.0;
    if (kind_ == Kind::power) return std::pow(y, 1.0 / param_);
    double hi = 1.0;
    while (psi(hi) < y) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        (psi(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

// integral psi(|v|/K) over grouped values; groups carry multiplicities so
// integer-valued grids cost O(#distinct) per probe.
double psi_integral(const std::vector<std::pair<double, double>>& groups,
                    double cell_volume, const OrliczSpec& spec, double K) {
    std::vector<double> terms;
    terms.reserve(groups.size());
    for (const auto& [v, count] : groups) terms.push_back(count * spec.psi(v / K));
    return cell_volume * pairwise_sum(terms);
}

}  // namespace

double orlicz_norm_of_values(std::span<const double> values, double cell_volume,
                             const OrliczSpec& spec, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("orlicz_norm: need tol > 0");
    double sup = 0.0;
    for (double v : values) sup = std::max(sup, std::fabs(v));
    if (sup == 0.0) return 0.0;

    std::vector<double> abs(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) abs[i] = std::fabs(values[i]);
    std::sort(abs.begin(), abs.end());
    std::vector<std::pair<double, double>> groups;
    for (std::size_t i = 0; i < abs.size();) {
        std::size_t j = i;
        while (j < abs.size() && abs[j] == abs[i]) ++j;
        groups.emplace_back(abs[i], static_cast<double>(j - i));
        i = j;
    }

    double center = sup / spec.psi_inverse(1.0);
    double lo = std::ldexp(center, -20);
    double hi = std::ldexp(center, 20);
    while (psi_integral(groups, cell_volume, spec, hi) > 1.0) hi *= 2.0;
    while (psi_integral(groups, cell_volume, spec, lo) <= 1.0 && lo > 1e-300) lo *= 0.5;

    while (hi - lo > tol * hi) {
        double mid = std::sqrt(lo * hi);
        (psi_integral(groups, cell_volume, spec, mid) <= 1.0 ? hi : lo) = mid;
    }
    return hi;
}

double orlicz_norm(const GridFunction& g, const OrliczSpec& spec, double tol) {
    return orlicz_norm_of_values(g.values(), g.cell_volume(), spec, tol);
}

double orlicz_exp_via_lp(const GridFunction& g, double alpha, double pmax) {
    if (alpha <= 0.0) throw std::invalid_argument("orlicz_exp_via_lp: need alpha > 0");
    if (sup_norm(g) == 0.0) return 0.0;
    double best = 0.0;
    // Geometric ladder from just above 1; the sup over p > 1 is approached
    // from below for flat functions.
    for (double p = 1.0 + 1.0 / 16.0; p <= pmax; p *= 1.5)
        best = std::max(best, std::pow(p, -1.0 / alpha) * lp_norm(g, p));
    best = std::max(best, std::pow(pmax, -1.0 / alpha) * lp_norm(g, pmax));
    return best;
}

GridFunction square_function(std::span<const HaarTerm1D> terms) {
    int finest = 0;
    for (const auto& t : terms) finest = std::max(finest, t.interval.level);
    GridFunction g({finest + 1});
    for (const auto& t : terms) {
        double w2 = 0.0;
        for (double c : t.coeffs) w2 += c * c;
        if (w2 == 0.0) continue;
        // chi_I weight: every cell inside the support picks up |a_I|^2.
        std::size_t first = t.interval.pos << (finest + 1 - t.interval.level);
        std::size_t len = std::size_t{1} << (finest + 1 - t.interval.level);
        for (std::size_t c = first; c < first + len; ++c) g[c] += w2;
    }
    for (std::size_t i = 0; i < g.cell_count(); ++i) g[i] = std::sqrt(g[i]);
    return g;
}

std::vector<LpGrowthRow> lp_growth_probe(const HaarExpansion& e,
                                         std::span<const double> p_ladder) {
    GridFunction g = expansion_to_grid(e);
    double half_dm1 = 0.5 * (e.dimension() - 1);
    double n_eff = std::max(e.scale(), 1);
    std::vector<LpGrowthRow> rows;
    rows.reserve(p_ladder.size());
    for (double p : p_ladder) {
        double norm = lp_norm(g, p);
        double denom = std::pow(p, half_dm1) * std::pow(n_eff, half_dm1);
        rows.push_back({p, norm, norm / denom});
    }
    return rows;
}

}  // namespace discrep
