#include "discrep/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace discrep {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

DyadicInterval::DyadicInterval(int level_, std::uint64_t pos_)
    : level(level_), pos(pos_) {
    require(level >= 0 && level < 63, "dyadic interval level out of range");
    require(pos < (std::uint64_t{1} << level), "dyadic interval position out of range");
}

double DyadicInterval::left() const { return std::ldexp(static_cast<double>(pos), -level); }
double DyadicInterval::right() const { return std::ldexp(static_cast<double>(pos + 1), -level); }
double DyadicInterval::length() const { return std::ldexp(1.0, -level); }
double DyadicInterval::mid() const { return std::ldexp(static_cast<double>(2 * pos + 1), -level - 1); }

bool DyadicInterval::contains(double x) const {
    double y = std::ldexp(x, level);  // exact power-of-two scaling
    return y >= static_cast<double>(pos) && y < static_cast<double>(pos + 1);
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
    if (other.level < level) return false;
    return (other.pos >> (other.level - level)) == pos;
}

int haar_eval(const DyadicInterval& I, double x) {
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("haar_eval: x outside [0,1)");
    double y = std::ldexp(x, I.level);
    double k = static_cast<double>(I.pos);
    if (y < k || y >= k + 1.0) return 0;
    return y < k + 0.5 ? -1 : +1;
}

DyadicRectangle::DyadicRectangle(std::vector<DyadicInterval> sides_)
    : sides(std::move(sides_)) {
    require(!sides.empty(), "dyadic rectangle needs dimension >= 1");
}

int DyadicRectangle::level_sum() const {
    int s = 0;
    for (const auto& I : sides) s += I.level;
    return s;
}

double DyadicRectangle::volume() const { return std::ldexp(1.0, -level_sum()); }

bool DyadicRectangle::contains(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension())
        throw std::invalid_argument("point dimension mismatch");
    for (int j = 0; j < dimension(); ++j)
        if (!sides[j].contains(x[j])) return false;
    return true;
}

bool DyadicRectangle::disjoint_from(const DyadicRectangle& other) const {
    require(dimension() == other.dimension(), "rectangle dimension mismatch");
    for (int j = 0; j < dimension(); ++j) {
        const auto& a = sides[j];
        const auto& b = other.sides[j];
        // Dyadic intervals intersect iff one contains the other.
        if (!a.contains(b) && !b.contains(a)) return true;
    }
    return false;
}

int haar_eval(const DyadicRectangle& R, std::span<const double> x) {
    if (static_cast<int>(x.size()) != R.dimension())
        throw std::invalid_argument("haar_eval: point dimension mismatch");
    int v = 1;
    for (int j = 0; j < R.dimension(); ++j) {
        int h = haar_eval(R.sides[j], x[j]);
        if (h == 0) return 0;
        v *= h;
    }
    return v;
}

namespace {

// Sign of h_outer on the strictly finer interval inner (inner must be a
// proper subinterval): -1 if inner sits in the left half, +1 otherwise.
int half_sign(const DyadicInterval& outer, const DyadicInterval& inner) {
    std::uint64_t at_child_level = inner.pos >> (inner.level - outer.level - 1);
    return at_child_level == 2 * outer.pos ? -1 : +1;
}

}  // namespace

std::optional<SignedRectangle> product_rule(const DyadicRectangle& a,
                                            const DyadicRectangle& b) {
    if (a.dimension() != 2 || b.dimension() != 2) return std::nullopt;
    if (a.level_sum() != b.level_sum()) return std::nullopt;
    if (a == b) return std::nullopt;
    // Equal volume in d=2 with a != b forces strictly different levels in
    // both coordinates; a coinciding side length means equal shapes, which
    // are either identical or disjoint.
    for (int j = 0; j < 2; ++j)
        if (a.sides[j].level == b.sides[j].level) return std::nullopt;
    if (a.disjoint_from(b)) return std::nullopt;

    int sign = 1;
    std::vector<DyadicInterval> meet(2);
    for (int j = 0; j < 2; ++j) {
        const auto& ia = a.sides[j];
        const auto& ib = b.sides[j];
        const auto& coarse = ia.level < ib.level ? ia : ib;
        const auto& fine = ia.level < ib.level ? ib : ia;
        sign *= half_sign(coarse, fine);
        meet[j] = fine;
    }
    return SignedRectangle{sign, DyadicRectangle{std::move(meet)}};
}

ShapeVector::ShapeVector(std::vector<int> levels_) : levels(std::move(levels_)) {
    require(!levels.empty(), "shape vector needs dimension >= 1");
    for (int r : levels) require(r >= 0, "shape levels must be nonnegative");
}

int ShapeVector::order() const {
    int s = 0;
    for (int r : levels) s += r;
    return s;
}

std::vector<ShapeVector> shapes_of_order(int n, int d) {
    require(n >= 0 && d >= 1, "shapes_of_order: need n >= 0, d >= 1");
    std::vector<ShapeVector> out;
    std::vector<int> cur(d, 0);
    // Lexicographic enumeration of compositions of n into d parts.
    auto rec = [&](auto&& self, int axis, int remaining) -> void {
        if (axis == d - 1) {
            cur[axis] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int r = 0; r <= remaining; ++r) {
            cur[axis] = r;
            self(self, axis + 1, remaining - r);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::uint64_t position_count(const ShapeVector& r) {
    int n = r.order();
    require(n < 63, "shape order too large");
    return std::uint64_t{1} << n;
}

DyadicRectangle rectangle_at(const ShapeVector& r, std::uint64_t position) {
    require(position < position_count(r), "rectangle position out of range");
    int d = r.dimension();
    std::vector<DyadicInterval> sides(d);
    for (int j = d - 1; j >= 0; --j) {
        std::uint64_t radix = std::uint64_t{1} << r.levels[j];
        sides[j] = DyadicInterval(r.levels[j], position % radix);
        position /= radix;
    }
    return DyadicRectangle{std::move(sides)};
}

std::uint64_t position_of(const ShapeVector& r, std::span<const double> x) {
    require(static_cast<int>(x.size()) == r.dimension(), "point dimension mismatch");
    std::uint64_t flat = 0;
    for (int j = 0; j < r.dimension(); ++j) {
        if (!(x[j] >= 0.0 && x[j] < 1.0)) throw std::domain_error("position_of: x outside [0,1)");
        auto p = static_cast<std::uint64_t>(std::ldexp(x[j], r.levels[j]));
        flat = (flat << r.levels[j]) | p;
    }
    return flat;
}

}  // namespace discrep
