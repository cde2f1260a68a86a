#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace dwp {

// splitmix64 with a hand-rolled uniform: std:: distributions are
// implementation-defined, which would break byte-identical reports across
// toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Eigen::VectorXd vector(int n, double lo = -1.0, double hi = 1.0) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
        return v;
    }

    Eigen::VectorXd point_in_box(const std::vector<std::array<double, 2>>& box) {
        Eigen::VectorXd v(static_cast<int>(box.size()));
        for (std::size_t i = 0; i < box.size(); ++i) v(static_cast<int>(i)) = uniform(box[i][0], box[i][1]);
        return v;
    }

    Eigen::MatrixXd symmetric(int n, double lo = -1.0, double hi = 1.0) {
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                m(i, j) = uniform(lo, hi);
                m(j, i) = m(i, j);
            }
        return m;
    }

private:
    std::uint64_t state_;
};

} // namespace dwp
