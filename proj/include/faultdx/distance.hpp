#ifndef FAULTDX_DISTANCE_HPP
#define FAULTDX_DISTANCE_HPP

#include <string>
#include <vector>

#include "core.hpp"

/**
 * @file distance.hpp
 * @brief Dense dissimilarity matrices and Gower double-centering.
 */

namespace faultdx {

enum class Metric { euclidean, manhattan, braycurtis };

inline std::string to_string(Metric m) {
    switch (m) {
        case Metric::euclidean: return "euclidean";
        case Metric::manhattan: return "manhattan";
        case Metric::braycurtis: return "braycurtis";
    }
    return "unknown";
}

inline Metric parse_metric(const std::string& s) {
    if (s == "euclidean") return Metric::euclidean;
    if (s == "manhattan") return Metric::manhattan;
    if (s == "braycurtis") return Metric::braycurtis;
    throw Error(ErrorCode::ConfigError, "unknown metric '" + s + "'");
}

/**
 * @brief Symmetric n×n dissimilarities with zero diagonal.
 */
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    DistanceMatrix(Matrix d, std::string metric_name, std::vector<std::string> sample_ids = {})
        : d_(std::move(d)), metric_name_(std::move(metric_name)), sample_ids_(std::move(sample_ids)) {
        require(d_.rows() == d_.cols(), ErrorCode::DimensionMismatch, "distance matrix must be square");
        require(d_.allFinite(), ErrorCode::InvalidArgument, "distance matrix has non-finite entries");
        for (Index i = 0; i < d_.rows(); ++i) {
            require(d_(i, i) == 0.0, ErrorCode::InvalidArgument, "distance matrix diagonal must be zero");
            for (Index j = 0; j < i; ++j) {
                require(d_(i, j) >= 0.0, ErrorCode::InvalidArgument, "distances must be nonnegative");
                require(d_(i, j) == d_(j, i), ErrorCode::InvalidArgument, "distance matrix must be symmetric");
            }
        }
        if (sample_ids_.empty()) {
            for (Index i = 0; i < d_.rows(); ++i) sample_ids_.push_back("s" + std::to_string(i));
        }
        require(static_cast<Index>(sample_ids_.size()) == d_.rows(), ErrorCode::DimensionMismatch, "sample id count differs from matrix size");
    }

    const Matrix& values() const noexcept { return d_; }
    double operator()(Index i, Index j) const { return d_(i, j); }
    Index size() const noexcept { return d_.rows(); }
    const std::string& metric_name() const noexcept { return metric_name_; }
    const std::vector<std::string>& sample_ids() const noexcept { return sample_ids_; }

    /// Sub-matrix over the given rows/columns, in order.
    DistanceMatrix select(const std::vector<Index>& idx) const {
        const Index m = static_cast<Index>(idx.size());
        Matrix out(m, m);
        std::vector<std::string> ids;
        for (Index a = 0; a < m; ++a) {
            ids.push_back(sample_ids_[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])]);
            for (Index b = 0; b < m; ++b) out(a, b) = d_(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
        }
        return DistanceMatrix(std::move(out), metric_name_, std::move(ids));
    }

private:
    Matrix d_;
    std::string metric_name_;
    std::vector<std::string> sample_ids_;
};

inline DistanceMatrix distance_matrix(const FeatureMatrix& fm, Metric metric) {
    const Matrix& x = fm.values();
    const Index n = x.rows();
    if (metric == Metric::braycurtis) {
        require((x.array() >= 0.0).all(), ErrorCode::NegativeInput, "Bray-Curtis needs nonnegative data");
    }
    Matrix d = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            double v = 0.0;
            switch (metric) {
                case Metric::euclidean:
                    v = (x.row(i) - x.row(j)).norm();
                    break;
                case Metric::manhattan:
                    v = (x.row(i) - x.row(j)).cwiseAbs().sum();
                    break;
                case Metric::braycurtis: {
                    const double num = (x.row(i) - x.row(j)).cwiseAbs().sum();
                    const double den = (x.row(i) + x.row(j)).sum();
                    v = den == 0.0 ? 0.0 : num / den;
                    break;
                }
            }
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return DistanceMatrix(std::move(d), to_string(metric), fm.sample_ids());
}

/// G = J·A·J with A = -½·d² and J = I - (1/n)·11ᵀ. Rows and columns of G sum to zero.
inline Matrix gower_center(const DistanceMatrix& dm) {
    const Index n = dm.size();
    Matrix a = -0.5 * dm.values().array().square().matrix();
    const Vector row_means = a.rowwise().mean();
    const Vector col_means = a.colwise().mean().transpose();
    const double grand = a.mean();
    Matrix g(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            g(i, j) = a(i, j) - row_means(i) - col_means(j) + grand;
        }
    }
    // Enforce exact symmetry; the two triangles can differ in the last bit.
    return 0.5 * (g + g.transpose());
}

}  // namespace faultdx

#endif
