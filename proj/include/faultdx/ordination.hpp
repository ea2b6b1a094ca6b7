#ifndef FAULTDX_ORDINATION_HPP
#define FAULTDX_ORDINATION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "core.hpp"
#include "distance.hpp"

/**
 * @file ordination.hpp
 * @brief Principal components of a feature matrix and principal coordinates of a
 * distance matrix.
 */

namespace faultdx {

enum class OrdinationKind { pca, pcoa };

/**
 * @brief Eigen-axes and sample coordinates.
 *
 * For PCA, `eigenvalues` holds all min(n, p) covariance eigenvalues and `coords`
 * the first `n_components` score columns. For PCoA, `eigenvalues` holds the
 * retained positive eigenvalues followed by the retained negative ones;
 * `coords` has one column per positive eigenvalue (scaled by sqrt(λ)) and
 * `imaginary_coords` one per negative eigenvalue (scaled by sqrt(-λ)).
 */
struct OrdinationResult {
    OrdinationKind kind = OrdinationKind::pca;
    std::vector<double> eigenvalues;
    Matrix coords;
    Matrix imaginary_coords;
    std::vector<double> variance_fraction;
    /// PCA only: p×n_components eigenvectors of the covariance.
    Matrix loadings;
    std::vector<std::string> sample_ids;
};

namespace detail {

/// Flip the column so its largest-magnitude entry is positive (first such entry on ties).
inline void fix_sign(Eigen::Ref<Vector> v) {
    Index arg = 0;
    for (Index i = 1; i < v.size(); ++i) {
        if (std::abs(v(i)) > std::abs(v(arg))) arg = i;
    }
    if (v.size() > 0 && v(arg) < 0.0) v = -v;
}

inline std::vector<double> positive_fractions(const std::vector<double>& eig) {
    double total = 0.0;
    for (double e : eig) {
        if (e > 0.0) total += e;
    }
    std::vector<double> out;
    for (double e : eig) {
        if (e > 0.0 && total > 0.0) out.push_back(e / total);
        else out.push_back(0.0);
    }
    return out;
}

}  // namespace detail

/**
 * PCA through the SVD of the column-centered data. Eigenvalue j is σ_j²/(n-1);
 * scores are the centered rows projected on the eigenvectors, and each
 * eigenvector is signed so its largest-magnitude loading is positive.
 */
inline OrdinationResult pca(const FeatureMatrix& fm, int n_components) {
    const Index n = fm.rows();
    const Index p = fm.cols();
    require(n >= 2, ErrorCode::TooFewSamples, "PCA needs at least 2 samples");
    require(n_components >= 1 && n_components <= std::min<Index>(n - 1, p), ErrorCode::InvalidArgument,
            "n_components must lie in [1, min(n-1, p)]");

    const Matrix centered = fm.values().rowwise() - fm.values().colwise().mean();
    Eigen::BDCSVD<Matrix> svd(centered, Eigen::ComputeThinV);
    const Vector sv = svd.singularValues();
    Matrix v = svd.matrixV();

    OrdinationResult res;
    res.kind = OrdinationKind::pca;
    res.sample_ids = fm.sample_ids();
    for (Index j = 0; j < sv.size(); ++j) {
        res.eigenvalues.push_back(std::max(0.0, sv(j) * sv(j) / static_cast<double>(n - 1)));
    }
    for (Index j = 0; j < n_components; ++j) detail::fix_sign(v.col(j));
    res.loadings = v.leftCols(n_components);
    res.coords = centered * res.loadings;
    res.variance_fraction = detail::positive_fractions(res.eigenvalues);
    return res;
}

struct ScreeEntry {
    double eigenvalue = 0.0;
    /// Share of the positive eigenvalue total; empty for negative (imaginary) axes.
    std::optional<double> fraction;
};

inline std::vector<ScreeEntry> scree(const OrdinationResult& ord) {
    double total = 0.0;
    for (double e : ord.eigenvalues) {
        if (e > 0.0) total += e;
    }
    std::vector<ScreeEntry> out;
    for (double e : ord.eigenvalues) {
        ScreeEntry s{e, std::nullopt};
        if (e >= 0.0) s.fraction = total > 0.0 ? std::max(e, 0.0) / total : 0.0;
        out.push_back(s);
    }
    return out;
}

/**
 * Principal coordinates from the Gower-centered matrix. Axes with
 * |λ| ≤ 1e-9·max|λ| are dropped; negative axes are kept as imaginary coordinates.
 */
inline OrdinationResult pcoa(const DistanceMatrix& dm) {
    const Index n = dm.size();
    require(n >= 2, ErrorCode::TooFewSamples, "PCoA needs at least 2 samples");
    const Matrix g = gower_center(dm);
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    require(es.info() == Eigen::Success, ErrorCode::InvalidArgument, "eigendecomposition failed");

    const Vector lam = es.eigenvalues();  // ascending
    const Matrix vecs = es.eigenvectors();
    const double tau = 1e-9 * lam.cwiseAbs().maxCoeff();

    std::vector<Index> pos, neg;
    for (Index j = n - 1; j >= 0; --j) {
        if (lam(j) > tau) pos.push_back(j);
    }
    for (Index j = n - 1; j >= 0; --j) {
        if (lam(j) < -tau) neg.push_back(j);
    }

    OrdinationResult res;
    res.kind = OrdinationKind::pcoa;
    res.sample_ids = dm.sample_ids();
    res.coords.resize(n, static_cast<Index>(pos.size()));
    res.imaginary_coords.resize(n, static_cast<Index>(neg.size()));
    for (std::size_t a = 0; a < pos.size(); ++a) {
        Vector v = vecs.col(pos[a]);
        detail::fix_sign(v);
        res.coords.col(static_cast<Index>(a)) = v * std::sqrt(lam(pos[a]));
        res.eigenvalues.push_back(lam(pos[a]));
    }
    for (std::size_t a = 0; a < neg.size(); ++a) {
        Vector v = vecs.col(neg[a]);
        detail::fix_sign(v);
        res.imaginary_coords.col(static_cast<Index>(a)) = v * std::sqrt(-lam(neg[a]));
        res.eigenvalues.push_back(lam(neg[a]));
    }
    res.variance_fraction = detail::positive_fractions(res.eigenvalues);
    return res;
}

}  // namespace faultdx

#endif
