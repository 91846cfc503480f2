#ifndef DISCREP_POINTSET_HPP
#define DISCREP_POINTSET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace discrep {

/// N points in [0,1)^d, stored flat in point-major order.
class PointSet {
public:
    PointSet(int d, std::vector<double> coords);

    int dimension() const { return d_; }
    int size() const { return static_cast<int>(coords_.size()) / d_; }

    double coord(int i, int j) const { return coords_[static_cast<std::size_t>(i) * d_ + j]; }
    std::span<const double> point(int i) const {
        return {coords_.data() + static_cast<std::size_t>(i) * d_, static_cast<std::size_t>(d_)};
    }
    std::span<const double> coords() const { return coords_; }

private:
    int d_;
    std::vector<double> coords_;
};

/// The 2^k-point set {(i/N, phi2(i))} where phi2 reverses the k low bits;
/// a (0,k,2)-net in base 2.
PointSet van_der_corput(int k);

/// Same with the index bits XOR-ed by a k-bit mask before reversal.
PointSet shifted_van_der_corput(int k, std::uint64_t shift);

/// i.i.d. uniform coordinates, deterministic per seed.
PointSet random_uniform(int n, int d, std::uint64_t seed);

/// One point per line, whitespace-separated coordinates; d inferred from the
/// first line. Coordinates must lie in [0,1). Errors carry line numbers.
PointSet pointset_from_file(const std::string& path);
PointSet pointset_from_stream_text(const std::string& text);  // same grammar

/// Writes the textual format with 17 significant digits (lossless for
/// doubles, so from_file inverts to_file).
void pointset_to_file(const PointSet& ps, const std::string& path);
std::string pointset_to_text(const PointSet& ps);

}  // namespace discrep

#endif
