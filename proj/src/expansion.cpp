#include "discrep/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace discrep {

std::uint64_t count_rectangles(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("count_rectangles: need n >= 0, d >= 1");
    unsigned __int128 binom = 1;
    for (int i = 1; i <= d - 1; ++i) {
        binom = binom * static_cast<unsigned>(n + d - i) / static_cast<unsigned>(i);
        if (binom > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("count_rectangles: overflow");
    }
    if (n >= 63) throw std::overflow_error("count_rectangles: overflow");
    unsigned __int128 total = binom << n;
    if (total > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("count_rectangles: overflow");
    return static_cast<std::uint64_t>(total);
}

ShapeCoefficients::ShapeCoefficients(ShapeVector shape)
    : shape_(std::move(shape)), count_(discrep::position_count(shape_)) {}

void ShapeCoefficients::set(std::uint64_t pos, double value) {
    if (pos >= count_) throw std::out_of_range("coefficient position out of range");
    if (dense_) {
        dense_values_[pos] = value;
        return;
    }
    if (value == 0.0) {
        sparse_values_.erase(pos);
        return;
    }
    sparse_values_[pos] = value;
    if (2 * sparse_values_.size() > count_) promote();
}

void ShapeCoefficients::promote() {
    dense_values_.assign(count_, 0.0);
    for (const auto& [pos, v] : sparse_values_) dense_values_[pos] = v;
    sparse_values_.clear();
    dense_ = true;
}

double ShapeCoefficients::at(std::uint64_t pos) const {
    if (pos >= count_) throw std::out_of_range("coefficient position out of range");
    if (dense_) return dense_values_[pos];
    auto it = sparse_values_.find(pos);
    return it == sparse_values_.end() ? 0.0 : it->second;
}

void ShapeCoefficients::for_each(
    const std::function<void(std::uint64_t, double)>& fn) const {
    if (dense_) {
        for (std::uint64_t p = 0; p < count_; ++p)
            if (dense_values_[p] != 0.0) fn(p, dense_values_[p]);
        return;
    }
    std::vector<std::uint64_t> order;
    order.reserve(sparse_values_.size());
    for (const auto& [pos, v] : sparse_values_) order.push_back(pos);
    std::sort(order.begin(), order.end());
    for (std::uint64_t p : order) fn(p, sparse_values_.at(p));
}

double ShapeCoefficients::sum_abs() const {
    double s = 0.0;
    for_each([&](std::uint64_t, double v) { s += std::fabs(v); });
    return s;
}

double ShapeCoefficients::sum_squares() const {
    double s = 0.0;
    for_each([&](std::uint64_t, double v) { s += v * v; });
    return s;
}

HaarExpansion::HaarExpansion(int d, int n, bool allow_coarse)
    : d_(d), n_(n), allow_coarse_(allow_coarse) {
    if (d < 1 || n < 0) throw std::invalid_argument("expansion needs d >= 1, n >= 0");
}

void HaarExpansion::set(const ShapeVector& shape, std::uint64_t pos, double value) {
    if (shape.dimension() != d_) throw std::invalid_argument("shape dimension mismatch");
    int order = shape.order();
    if (order != n_ && !(allow_coarse_ && order < n_))
        throw std::invalid_argument("shape order must equal the expansion scale");
    auto it = shapes_.find(shape);
    if (it == shapes_.end())
        it = shapes_.emplace(shape, ShapeCoefficients(shape)).first;
    it->second.set(pos, value);
}

double HaarExpansion::at(const ShapeVector& shape, std::uint64_t pos) const {
    auto it = shapes_.find(shape);
    return it == shapes_.end() ? 0.0 : it->second.at(pos);
}

void HaarExpansion::for_each_nonzero(
    const std::function<void(const ShapeVector&, std::uint64_t, double)>& fn) const {
    for (const auto& [shape, coeffs] : shapes_)
        coeffs.for_each([&](std::uint64_t p, double v) { fn(shape, p, v); });
}

double HaarExpansion::sum_abs() const {
    double s = 0.0;
    for (const auto& [shape, coeffs] : shapes_) s += coeffs.sum_abs();
    return s;
}

double HaarExpansion::sum_squares() const {
    double s = 0.0;
    for (const auto& [shape, coeffs] : shapes_) s += coeffs.sum_squares();
    return s;
}

std::uint64_t HaarExpansion::nonzero_count() const {
    std::uint64_t c = 0;
    for_each_nonzero([&](const ShapeVector&, std::uint64_t, double) { ++c; });
    return c;
}

namespace {

struct AxisCover {
    std::size_t first;   // first covered cell index on this axis
    std::size_t half;    // cells per half
    std::size_t stride;  // flat stride of this axis
};

void add_cover(std::span<double> values, const std::vector<AxisCover>& axes,
               std::size_t axis, std::size_t base, double w) {
    const AxisCover& a = axes[axis];
    if (axis + 1 == axes.size()) {
        // Innermost axis is contiguous (stride 1).
        double* left = values.data() + base + a.first;
        for (std::size_t o = 0; o < a.half; ++o) left[o] -= w;
        for (std::size_t o = a.half; o < 2 * a.half; ++o) left[o] += w;
        return;
    }
    std::size_t off = base + a.first * a.stride;
    for (std::size_t o = 0; o < a.half; ++o, off += a.stride)
        add_cover(values, axes, axis + 1, off, -w);
    for (std::size_t o = 0; o < a.half; ++o, off += a.stride)
        add_cover(values, axes, axis + 1, off, +w);
}

std::vector<AxisCover> make_axis_covers(const GridFunction& g, const ShapeVector& shape,
                                        std::uint64_t position) {
    int d = shape.dimension();
    if (g.dimension() != d) throw std::invalid_argument("grid/shape dimension mismatch");
    std::vector<AxisCover> axes(d);
    std::size_t stride = 1;
    for (int j = d - 1; j >= 0; --j) {
        int m = g.levels()[j];
        int r = shape.levels[j];
        if (m < r + 1)
            throw std::invalid_argument("grid too coarse to resolve a Haar rectangle");
        std::uint64_t radix = std::uint64_t{1} << r;
        std::uint64_t p = position & (radix - 1);
        position >>= r;
        axes[j].first = static_cast<std::size_t>(p) << (m - r);
        axes[j].half = std::size_t{1} << (m - r - 1);
        axes[j].stride = stride;
        stride <<= m;
    }
    return axes;
}

}  // namespace

void add_haar_to_grid(GridFunction& g, const ShapeVector& shape,
                      std::uint64_t position, double w) {
    if (w == 0.0) return;
    auto axes = make_axis_covers(g, shape, position);
    add_cover(g.values(), axes, 0, 0, w);
}

void add_shape_to_grid(GridFunction& g, const ShapeCoefficients& coeffs, double scale) {
    coeffs.for_each([&](std::uint64_t p, double v) {
        add_haar_to_grid(g, coeffs.shape(), p, scale * v);
    });
}

GridFunction expansion_to_grid(const HaarExpansion& e, int level_budget) {
    std::vector<int> levels(e.dimension(), e.scale() + 1);
    GridFunction g(std::move(levels), 0.0, level_budget);
    for (const auto& [shape, coeffs] : e.shapes()) add_shape_to_grid(g, coeffs);
    return g;
}

RFunction::RFunction(ShapeVector shape_, std::vector<std::int8_t> signs_)
    : shape(std::move(shape_)), signs(std::move(signs_)) {
    if (signs.size() != discrep::position_count(shape))
        throw std::invalid_argument("r-function sign count must be 2^|r|");
    for (std::int8_t s : signs)
        if (s < -1 || s > 1) throw std::invalid_argument("r-function signs must be in {-1,0,+1}");
}

bool RFunction::full() const {
    return std::all_of(signs.begin(), signs.end(), [](std::int8_t s) { return s != 0; });
}

GridFunction RFunction::grid(int level_budget) const {
    std::vector<int> levels(shape.levels);
    for (int& m : levels) ++m;
    GridFunction g(std::move(levels), 0.0, level_budget);
    add_to_grid(g);
    return g;
}

void RFunction::add_to_grid(GridFunction& g, double scale) const {
    for (std::uint64_t p = 0; p < signs.size(); ++p)
        if (signs[p] != 0) add_haar_to_grid(g, shape, p, scale * signs[p]);
}

namespace {

std::vector<std::uint64_t> decode_position(const ShapeVector& shape, std::uint64_t flat) {
    int d = shape.dimension();
    std::vector<std::uint64_t> per_axis(d);
    for (int j = d - 1; j >= 0; --j) {
        std::uint64_t radix = std::uint64_t{1} << shape.levels[j];
        per_axis[j] = flat & (radix - 1);
        flat >>= shape.levels[j];
    }
    return per_axis;
}

}  // namespace

std::string expansion_to_json(const HaarExpansion& e) {
    nlohmann::json out;
    out["d"] = e.dimension();
    out["n"] = e.scale();
    auto& entries = out["entries"] = nlohmann::json::array();
    e.for_each_nonzero([&](const ShapeVector& shape, std::uint64_t pos, double v) {
        entries.push_back({{"shape", shape.levels},
                           {"position", decode_position(shape, pos)},
                           {"value", v}});
    });
    return out.dump();
}

HaarExpansion expansion_from_json(const std::string& text) {
    nlohmann::json in = nlohmann::json::parse(text);
    int d = in.at("d").get<int>();
    int n = in.at("n").get<int>();
    HaarExpansion e(d, n, /*allow_coarse=*/true);
    for (const auto& entry : in.at("entries")) {
        ShapeVector shape(entry.at("shape").get<std::vector<int>>());
        auto per_axis = entry.at("position").get<std::vector<std::uint64_t>>();
        if (static_cast<int>(per_axis.size()) != d)
            throw std::invalid_argument("entry position dimension mismatch");
        std::uint64_t flat = 0;
        for (int j = 0; j < d; ++j) {
            if (per_axis[j] >= (std::uint64_t{1} << shape.levels[j]))
                throw std::out_of_range("entry position out of range");
            flat = (flat << shape.levels[j]) | per_axis[j];
        }
        e.set(shape, flat, entry.at("value").get<double>());
    }
    return e;
}

}  // namespace discrep
