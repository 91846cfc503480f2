#ifndef DISCREP_DYADIC_HPP
#define DISCREP_DYADIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace discrep {

/// Half-open dyadic interval [k*2^-j, (k+1)*2^-j) with 0 <= k < 2^j.
struct DyadicInterval {
    int level = 0;
    std::uint64_t pos = 0;

    DyadicInterval() = default;
    DyadicInterval(int level_, std::uint64_t pos_);

    double left() const;
    double right() const;
    double length() const;
    double mid() const;

    bool contains(double x) const;
    /// Dyadic nesting: true iff other is a (not necessarily proper) subinterval.
    bool contains(const DyadicInterval& other) const;

    bool operator==(const DyadicInterval&) const = default;
};

/// Haar value on I: -1 on the left half, +1 on the right half, 0 outside.
/// Values are sup-normalized; x must lie in [0,1).
int haar_eval(const DyadicInterval& I, double x);

/// d-fold product of dyadic intervals.
struct DyadicRectangle {
    std::vector<DyadicInterval> sides;

    DyadicRectangle() = default;
    explicit DyadicRectangle(std::vector<DyadicInterval> sides_);

    int dimension() const { return static_cast<int>(sides.size()); }
    int level_sum() const;
    double volume() const;

    bool contains(std::span<const double> x) const;
    bool disjoint_from(const DyadicRectangle& other) const;

    bool operator==(const DyadicRectangle&) const = default;
};

/// Tensor-product Haar value; x must lie in [0,1)^d.
int haar_eval(const DyadicRectangle& R, std::span<const double> x);

struct SignedRectangle {
    int sign = 1;  // +-1
    DyadicRectangle rect;
};

/// Two-dimensional product rule: h_R * h_R' = sign * h_{R /\ R'} when R, R'
/// are distinct, overlapping, of equal volume and with no coinciding side
/// lengths. Returns nullopt whenever those shape conditions fail (including
/// any d != 2 input, where same-volume boxes may share a coordinate).
std::optional<SignedRectangle> product_rule(const DyadicRectangle& a,
                                            const DyadicRectangle& b);

/// Level vector r = (r_1,...,r_d); the family D_r of rectangles with side
/// lengths 2^-r_j partitions the unit cube into 2^|r| congruent boxes.
struct ShapeVector {
    std::vector<int> levels;

    ShapeVector() = default;
    explicit ShapeVector(std::vector<int> levels_);

    int dimension() const { return static_cast<int>(levels.size()); }
    int order() const;  // |r|

    bool operator==(const ShapeVector&) const = default;
    bool operator<(const ShapeVector& other) const { return levels < other.levels; }
};

/// All shapes with |r| = n in dimension d, lexicographic order.
std::vector<ShapeVector> shapes_of_order(int n, int d);

/// Number of boxes in D_r, i.e. 2^|r|.
std::uint64_t position_count(const ShapeVector& r);

/// Decode a row-major position index into the rectangle of D_r it names.
DyadicRectangle rectangle_at(const ShapeVector& r, std::uint64_t position);

/// Row-major position index of the rectangle of D_r containing x.
std::uint64_t position_of(const ShapeVector& r, std::span<const double> x);

}  // namespace discrep

#endif
