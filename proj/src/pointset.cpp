#include "discrep/pointset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace discrep {

PointSet::PointSet(int d, std::vector<double> coords)
    : d_(d), coords_(std::move(coords)) {
    if (d_ < 1) throw std::invalid_argument("point set needs dimension >= 1");
    if (coords_.empty() || coords_.size() % d_ != 0)
        throw std::invalid_argument("coordinate count must be a positive multiple of d");
    for (double c : coords_)
        if (!(c >= 0.0 && c < 1.0))
            throw std::domain_error("point coordinates must lie in [0,1)");
}

namespace {

std::uint64_t reverse_bits(std::uint64_t x, int k) {
    std::uint64_t r = 0;
    for (int b = 0; b < k; ++b) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

}  // namespace

PointSet van_der_corput(int k) { return shifted_van_der_corput(k, 0); }

PointSet shifted_van_der_corput(int k, std::uint64_t shift) {
    if (k < 0 || k > 20) throw std::invalid_argument("van der Corput: need 0 <= k <= 20");
    std::uint64_t n = std::uint64_t{1} << k;
    if (shift >= n) throw std::invalid_argument("van der Corput shift needs fewer than k bits");
    std::vector<double> coords;
    coords.reserve(2 * n);
    for (std::uint64_t i = 0; i < n; ++i) {
        coords.push_back(std::ldexp(static_cast<double>(i), -k));
        coords.push_back(std::ldexp(static_cast<double>(reverse_bits(i ^ shift, k)), -k));
    }
    return PointSet(2, std::move(coords));
}

PointSet random_uniform(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("random_uniform: need n >= 1, d >= 1");
    std::mt19937_64 rng(seed);
    std::vector<double> coords(static_cast<std::size_t>(n) * d);
    for (double& c : coords)
        c = std::ldexp(static_cast<double>(rng() >> 11), -53);  // uniform in [0,1)
    return PointSet(d, std::move(coords));
}

PointSet pointset_from_stream_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> coords;
    int d = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) {
            std::string rest;
            ls.clear();
            ls >> rest;
            throw std::runtime_error("point file parse error at line " +
                                     std::to_string(line_no) + ": '" + rest + "'");
        }
        if (row.empty()) continue;  // blank line
        if (d == 0) d = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != d)
            throw std::runtime_error("point file dimension mismatch at line " +
                                     std::to_string(line_no) + ": expected " +
                                     std::to_string(d) + " coordinates");
        for (double c : row)
            if (!(c >= 0.0 && c < 1.0))
                throw std::runtime_error("point coordinate out of [0,1) at line " +
                                         std::to_string(line_no));
        coords.insert(coords.end(), row.begin(), row.end());
    }
    if (coords.empty()) throw std::runtime_error("point file contains no points");
    return PointSet(d, std::move(coords));
}

PointSet pointset_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return pointset_from_stream_text(buf.str());
}

std::string pointset_to_text(const PointSet& ps) {
    std::ostringstream out;
    char buf[64];
    for (int i = 0; i < ps.size(); ++i) {
        for (int j = 0; j < ps.dimension(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", ps.coord(i, j));
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
    return out.str();
}

void pointset_to_file(const PointSet& ps, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write point file: " + path);
    out << pointset_to_text(ps);
}

}  // namespace discrep
