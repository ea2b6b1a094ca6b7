#ifndef FAULTDX_TESTS_FIXTURES_HPP
#define FAULTDX_TESTS_FIXTURES_HPP

// Constructed instances shared by the unit suites and the acceptance runner.

#include <numbers>
#include <random>
#include <vector>

#include <faultdx/distance.hpp>
#include <faultdx/hypotest.hpp>

namespace fixture {

using faultdx::DistanceMatrix;
using faultdx::GroupLabels;
using faultdx::Index;
using faultdx::Matrix;

struct Instance {
    DistanceMatrix dm;
    GroupLabels groups;
    std::vector<std::vector<double>> values;  // univariate instances only
};

/// Euclidean distances of scalar observations, grouped as given.
inline Instance univariate(const std::vector<std::vector<double>>& groups) {
    std::vector<double> flat;
    std::vector<int> labels;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (double v : groups[g]) {
            flat.push_back(v);
            labels.push_back(static_cast<int>(g));
        }
    }
    const auto n = static_cast<Index>(flat.size());
    Matrix d(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) d(i, j) = std::abs(flat[static_cast<std::size_t>(i)] - flat[static_cast<std::size_t>(j)]);
    }
    return {DistanceMatrix(d, "euclidean"), GroupLabels(labels), groups};
}

/// Random univariate instance with 2-5 groups of 4-40 points and shifted means.
inline Instance random_univariate(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> groups_dist(2, 5), size_dist(4, 40);
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> shift(-2.0, 2.0);
    std::vector<std::vector<double>> groups(static_cast<std::size_t>(groups_dist(gen)));
    for (auto& g : groups) {
        const double mu = shift(gen);
        g.resize(static_cast<std::size_t>(size_dist(gen)));
        for (double& v : g) v = mu + nd(gen);
    }
    return univariate(groups);
}

inline Instance from_points(const Matrix& pts, const std::vector<int>& labels) {
    return {faultdx::distance_matrix(faultdx::FeatureMatrix::from_values(pts), faultdx::Metric::euclidean), GroupLabels(labels), {}};
}

/// Eight planar points: group 1 is group 0 reflected across y = x, both centred on the origin.
inline Instance mirrored_pair() {
    Matrix pts(8, 2);
    pts << 1, 0, -1, 0, 0, 2, 0, -2,  //
        0, 1, 0, -1, 2, 0, -2, 0;
    return from_points(pts, {0, 0, 0, 0, 1, 1, 1, 1});
}

/// Ten points on a radius-1 circle and ten on a radius-5 circle around (3, -2), at random angles.
inline Instance concentric_circles(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Matrix pts(20, 2);
    std::vector<int> labels;
    for (Index i = 0; i < 20; ++i) {
        const double r = i < 10 ? 1.0 : 5.0;
        const double a = angle(gen);
        pts.row(i) << 3.0 + r * std::cos(a), -2.0 + r * std::sin(a);
        labels.push_back(i < 10 ? 0 : 1);
    }
    return from_points(pts, labels);
}

/// I.i.d. Gaussian points in 3-D with three randomly assigned groups of ten.
inline Instance null_instance(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd;
    Matrix pts(30, 3);
    for (Index i = 0; i < 30; ++i) {
        for (Index j = 0; j < 3; ++j) pts(i, j) = nd(gen);
    }
    std::vector<int> labels;
    for (int i = 0; i < 30; ++i) labels.push_back(i % 3);
    std::shuffle(labels.begin(), labels.end(), gen);
    return from_points(pts, labels);
}

}  // namespace fixture

#endif
