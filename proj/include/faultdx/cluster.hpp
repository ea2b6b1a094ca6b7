#ifndef FAULTDX_CLUSTER_HPP
#define FAULTDX_CLUSTER_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "distance.hpp"
#include "rng.hpp"

/**
 * @file cluster.hpp
 * @brief k-means, Gaussian mixtures fitted by EM, silhouette widths and
 * cluster-count selection from the WSS elbow.
 */

namespace faultdx {

namespace detail {

inline constexpr std::uint64_t kKmeansStream = 0x6b6d65616e73ULL;
inline constexpr std::uint64_t kGmmStream = 0x676d6dULL;

/// k-means++ seeding: first center uniform, then proportional to squared distance to the nearest chosen center.
inline std::vector<Index> kmeanspp_seeds(const Matrix& x, int k, CounterRng& rng) {
    const Index n = x.rows();
    std::vector<Index> seeds;
    seeds.reserve(static_cast<std::size_t>(k));
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    const auto first = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    seeds.push_back(first);
    chosen[static_cast<std::size_t>(first)] = true;

    Vector mind2(n);
    for (Index i = 0; i < n; ++i) mind2(i) = (x.row(i) - x.row(first)).squaredNorm();

    while (static_cast<int>(seeds.size()) < k) {
        const double total = mind2.sum();
        Index pick = -1;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            for (Index i = 0; i < n; ++i) {
                acc += mind2(i);
                if (mind2(i) > 0.0 && acc > target) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) {
                for (Index i = n - 1; i >= 0; --i) {
                    if (mind2(i) > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        } else {
            // All remaining points coincide with chosen centers; take an unused index.
            std::vector<Index> unused;
            for (Index i = 0; i < n; ++i) {
                if (!chosen[static_cast<std::size_t>(i)]) unused.push_back(i);
            }
            pick = unused[static_cast<std::size_t>(rng.below(unused.size()))];
        }
        seeds.push_back(pick);
        chosen[static_cast<std::size_t>(pick)] = true;
        for (Index i = 0; i < n; ++i) mind2(i) = std::min(mind2(i), (x.row(i) - x.row(pick)).squaredNorm());
    }
    return seeds;
}

/// Nearest-center assignment; ties go to the lowest center index. Returns the WSS.
inline double assign_nearest(const Matrix& x, const Matrix& centers, Labels& labels) {
    double wss = 0.0;
    for (Index i = 0; i < x.rows(); ++i) {
        int best = 0;
        double bestd = std::numeric_limits<double>::infinity();
        for (Index c = 0; c < centers.rows(); ++c) {
            const double d = (x.row(i) - centers.row(c)).squaredNorm();
            if (d < bestd) {
                bestd = d;
                best = static_cast<int>(c);
            }
        }
        labels[static_cast<std::size_t>(i)] = best;
        wss += bestd;
    }
    return wss;
}

inline double within_ss(const Matrix& x, const Matrix& centers, const Labels& labels) {
    double wss = 0.0;
    for (Index i = 0; i < x.rows(); ++i) wss += (x.row(i) - centers.row(labels[static_cast<std::size_t>(i)])).squaredNorm();
    return wss;
}

}  // namespace detail

struct KMeansResult {
    Labels labels;
    Matrix centroids;
    double wss = 0.0;
    /// WSS of the seeding assignment for the returned restart.
    double initial_wss = 0.0;
    int iterations = 0;
    int restart = 0;
};

/**
 * Lloyd's algorithm from k-means++ seeds, best of `restarts` runs by WSS.
 * Restart r draws from the stream keyed on (seed, k, r). Empty clusters are
 * re-seeded with the point farthest from its centroid.
 */
inline KMeansResult kmeans_fit(const FeatureMatrix& fm, int k, std::uint64_t seed, int restarts = 10, int max_iter = 300, unsigned workers = 1) {
    const Matrix& x = fm.values();
    const Index n = x.rows();
    require(k >= 1, ErrorCode::InvalidArgument, "k must be at least 1");
    require(k <= n, ErrorCode::KTooLarge, "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    require(restarts >= 1, ErrorCode::InvalidArgument, "restarts must be at least 1");

    std::vector<KMeansResult> runs(static_cast<std::size_t>(restarts));
    parallel_for(runs.size(), workers, [&](std::size_t r) {
        CounterRng rng(seed, {detail::kKmeansStream, static_cast<std::uint64_t>(k), r});
        const auto seeds = detail::kmeanspp_seeds(x, k, rng);
        Matrix centers(k, x.cols());
        for (int c = 0; c < k; ++c) centers.row(c) = x.row(seeds[static_cast<std::size_t>(c)]);

        KMeansResult res;
        res.restart = static_cast<int>(r);
        res.labels.assign(static_cast<std::size_t>(n), 0);
        res.initial_wss = detail::assign_nearest(x, centers, res.labels);

        for (int it = 0; it < max_iter; ++it) {
            res.iterations = it + 1;
            Matrix sums = Matrix::Zero(k, x.cols());
            std::vector<Index> counts(static_cast<std::size_t>(k), 0);
            for (Index i = 0; i < n; ++i) {
                const int l = res.labels[static_cast<std::size_t>(i)];
                sums.row(l) += x.row(i);
                ++counts[static_cast<std::size_t>(l)];
            }
            for (int c = 0; c < k; ++c) {
                if (counts[static_cast<std::size_t>(c)] > 0) {
                    centers.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
                }
            }
            // Empty clusters take the point farthest from its own centroid among clusters with spare members.
            for (int c = 0; c < k; ++c) {
                if (counts[static_cast<std::size_t>(c)] > 0) continue;
                Index far = -1;
                double fard = -1.0;
                for (Index i = 0; i < n; ++i) {
                    const int l = res.labels[static_cast<std::size_t>(i)];
                    if (counts[static_cast<std::size_t>(l)] < 2) continue;
                    const double d = (x.row(i) - centers.row(l)).squaredNorm();
                    if (d > fard) {
                        fard = d;
                        far = i;
                    }
                }
                if (far < 0) break;
                const int old = res.labels[static_cast<std::size_t>(far)];
                --counts[static_cast<std::size_t>(old)];
                res.labels[static_cast<std::size_t>(far)] = c;
                counts[static_cast<std::size_t>(c)] = 1;
                centers.row(c) = x.row(far);
                centers.row(old) = Vector::Zero(x.cols()).transpose();
                for (Index i = 0; i < n; ++i) {
                    if (res.labels[static_cast<std::size_t>(i)] == old) centers.row(old) += x.row(i);
                }
                centers.row(old) /= static_cast<double>(counts[static_cast<std::size_t>(old)]);
            }

            Labels next(res.labels.size());
            detail::assign_nearest(x, centers, next);
            if (next == res.labels) break;
            res.labels = std::move(next);
        }
        // Final centroids are the means of the final assignment.
        Matrix sums = Matrix::Zero(k, x.cols());
        std::vector<Index> counts(static_cast<std::size_t>(k), 0);
        for (Index i = 0; i < n; ++i) {
            const int l = res.labels[static_cast<std::size_t>(i)];
            sums.row(l) += x.row(i);
            ++counts[static_cast<std::size_t>(l)];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) centers.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
        }
        res.centroids = centers;
        res.wss = detail::within_ss(x, centers, res.labels);
        runs[r] = std::move(res);
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].wss < runs[best].wss) best = r;
    }
    return std::move(runs[best]);
}

struct GmmOptions {
    std::uint64_t seed = 0;
    int restarts = 5;
    int max_iter = 500;
    double rel_tol = 1e-8;
    double reg = 1e-6;
    /// k-means restarts behind each EM start.
    int kmeans_restarts = 10;
    unsigned workers = 1;
};

/**
 * @brief Fitted Gaussian mixture with full per-component covariances.
 */
struct GmmModel {
    int k = 0;
    Vector weights;
    Matrix means;  ///< k×p
    std::vector<Matrix> covariances;
    double log_likelihood = 0.0;
    double bic = 0.0;
    double aic = 0.0;
    int n_iter = 0;
    bool converged = false;
    /// Log-likelihood after each E-step of the returned restart.
    std::vector<double> loglik_trace;

    Index dim() const { return means.cols(); }

    /// Free parameters: (k-1) weights, k·p means, k·p(p+1)/2 covariance entries.
    static double parameter_count(int k, Index p) {
        const double kp = static_cast<double>(k) * static_cast<double>(p);
        return static_cast<double>(k - 1) + kp + kp * static_cast<double>(p + 1) / 2.0;
    }
};

namespace detail {

/// log N(x | mean, LLᵀ) for each row of x, given the lower Cholesky factor.
inline Vector gaussian_log_density(const Matrix& x, const Eigen::RowVectorXd& mean, const Eigen::LLT<Matrix>& chol) {
    const Index p = x.cols();
    const Matrix centered = (x.rowwise() - mean).transpose();
    const Matrix z = chol.matrixL().solve(centered);
    const double logdet = 2.0 * chol.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const double cst = -0.5 * (static_cast<double>(p) * std::log(2.0 * std::numbers::pi) + logdet);
    return (cst - 0.5 * z.colwise().squaredNorm().array()).matrix().transpose();
}

/// Per-row log-sum-exp of a matrix.
inline Vector row_logsumexp(const Matrix& m) {
    Vector out(m.rows());
    for (Index i = 0; i < m.rows(); ++i) {
        const double mx = m.row(i).maxCoeff();
        out(i) = mx + std::log((m.row(i).array() - mx).exp().sum());
    }
    return out;
}

struct EmState {
    Vector weights;
    Matrix means;
    std::vector<Matrix> covs;
    std::vector<Eigen::LLT<Matrix>> chols;
};

/// Weighted log densities log(w_c) + log N(x_i | c), n×k.
inline Matrix weighted_log_densities(const Matrix& x, const EmState& st) {
    const Index k = st.means.rows();
    Matrix lw(x.rows(), k);
    for (Index c = 0; c < k; ++c) {
        lw.col(c) = gaussian_log_density(x, st.means.row(c), st.chols[static_cast<std::size_t>(c)]).array() + std::log(st.weights(c));
    }
    return lw;
}

/**
 * M-step from responsibilities. The covariance ridge is reg·trace(S)/p (falling back to
 * the pooled data trace when S is zero); it grows ×10 up to three times if Cholesky fails.
 */
inline EmState m_step(const Matrix& x, const Matrix& resp, double reg, double data_trace_per_dim) {
    const Index n = x.rows();
    const Index p = x.cols();
    const Index k = resp.cols();
    EmState st;
    st.weights.resize(k);
    st.means.resize(k, p);
    for (Index c = 0; c < k; ++c) {
        const double nk = resp.col(c).sum();
        st.weights(c) = nk / static_cast<double>(n);
        require(st.weights(c) >= 1e-12 && nk > 0.0, ErrorCode::DegenerateComponent, "component " + std::to_string(c) + " weight underflowed");
        const Eigen::RowVectorXd mu = (resp.col(c).transpose() * x) / nk;
        st.means.row(c) = mu;
        const Matrix centered = x.rowwise() - mu;
        Matrix s = (centered.transpose() * resp.col(c).asDiagonal() * centered) / nk;
        s = 0.5 * (s + s.transpose());
        double base = s.trace() / static_cast<double>(p);
        if (!(base > 0.0)) base = data_trace_per_dim > 0.0 ? data_trace_per_dim : 1.0;
        double ridge = reg * base;
        bool ok = false;
        for (int attempt = 0; attempt <= 3 && !ok; ++attempt) {
            Matrix cov = s;
            cov.diagonal().array() += ridge;
            Eigen::LLT<Matrix> chol(cov);
            if (chol.info() == Eigen::Success && chol.matrixL().toDenseMatrix().diagonal().minCoeff() > 0.0) {
                st.covs.push_back(std::move(cov));
                st.chols.push_back(std::move(chol));
                ok = true;
            } else {
                ridge *= 10.0;
            }
        }
        require(ok, ErrorCode::DegenerateComponent, "component " + std::to_string(c) + " covariance is not positive definite after regularization");
    }
    st.weights /= st.weights.sum();
    return st;
}

}  // namespace detail

/**
 * EM for a k-component full-covariance mixture. Each restart starts from the hard
 * partition of a k-means fit whose seed is keyed on (seed, k, restart). The run
 * with the highest final log-likelihood is returned.
 */
inline GmmModel gmm_fit(const FeatureMatrix& fm, int k, const GmmOptions& opts = {}) {
    const Matrix& x = fm.values();
    const Index n = x.rows();
    const Index p = x.cols();
    require(k >= 1, ErrorCode::InvalidArgument, "k must be at least 1");
    require(k <= n, ErrorCode::KTooLarge, "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    require(opts.restarts >= 1 && opts.max_iter >= 1 && opts.kmeans_restarts >= 1, ErrorCode::InvalidArgument, "restarts and max_iter must be positive");

    const Eigen::RowVectorXd grand_mean = x.colwise().mean();
    const double data_trace_per_dim = (x.rowwise() - grand_mean).squaredNorm() / static_cast<double>(n * p);

    std::vector<std::optional<GmmModel>> runs(static_cast<std::size_t>(opts.restarts));
    std::vector<std::optional<Error>> failures(runs.size());
    parallel_for(runs.size(), opts.workers, [&](std::size_t r) {
        try {
            const std::uint64_t init_seed = derive_key(opts.seed, {detail::kGmmStream, static_cast<std::uint64_t>(k), r});
            const Labels hard = kmeans_fit(fm, k, init_seed, opts.kmeans_restarts).labels;
            Matrix resp = Matrix::Zero(n, k);
            for (Index i = 0; i < n; ++i) resp(i, hard[static_cast<std::size_t>(i)]) = 1.0;

            GmmModel m;
            m.k = k;
            auto st = detail::m_step(x, resp, opts.reg, data_trace_per_dim);
            double prev = -std::numeric_limits<double>::infinity();
            for (int it = 0; it < opts.max_iter; ++it) {
                const Matrix lw = detail::weighted_log_densities(x, st);
                const Vector lse = detail::row_logsumexp(lw);
                const double ll = lse.sum();
                require(std::isfinite(ll), ErrorCode::DegenerateComponent, "log-likelihood is not finite");
                m.loglik_trace.push_back(ll);
                m.n_iter = it + 1;
                if (std::isfinite(prev) && std::abs(ll - prev) < opts.rel_tol * std::abs(ll)) {
                    m.converged = true;
                    break;
                }
                prev = ll;
                resp = (lw.colwise() - lse).array().exp();
                st = detail::m_step(x, resp, opts.reg, data_trace_per_dim);
            }
            m.weights = st.weights;
            m.means = st.means;
            m.covariances = st.covs;
            m.log_likelihood = m.loglik_trace.back();
            const double params = GmmModel::parameter_count(k, p);
            m.bic = -2.0 * m.log_likelihood + params * std::log(static_cast<double>(n));
            m.aic = -2.0 * m.log_likelihood + 2.0 * params;
            runs[r] = std::move(m);
        } catch (const Error& e) {
            failures[r] = e;
        }
    });

    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r] && (!best || runs[r]->log_likelihood > runs[*best]->log_likelihood)) best = r;
    }
    if (!best) throw *failures.front();
    return std::move(*runs[*best]);
}

struct GmmPrediction {
    Matrix responsibilities;  ///< n×k
    Labels labels;
};

/// Posterior component probabilities; hard label is the argmax, lowest index on ties.
inline GmmPrediction gmm_predict(const GmmModel& model, const FeatureMatrix& fm) {
    require(fm.cols() == model.dim(), ErrorCode::DimensionMismatch,
            "model expects " + std::to_string(model.dim()) + " features, got " + std::to_string(fm.cols()));
    detail::EmState st;
    st.weights = model.weights;
    st.means = model.means;
    for (const auto& c : model.covariances) st.chols.emplace_back(c);
    const Matrix lw = detail::weighted_log_densities(fm.values(), st);
    const Vector lse = detail::row_logsumexp(lw);

    GmmPrediction out;
    out.responsibilities = (lw.colwise() - lse).array().exp();
    out.labels.resize(static_cast<std::size_t>(fm.rows()));
    for (Index i = 0; i < fm.rows(); ++i) {
        auto row = out.responsibilities.row(i);
        row /= row.sum();
        Index arg = 0;
        for (Index c = 1; c < row.size(); ++c) {
            if (row(c) > row(arg)) arg = c;
        }
        out.labels[static_cast<std::size_t>(i)] = static_cast<int>(arg);
    }
    return out;
}

struct SilhouetteResult {
    std::vector<double> widths;
    double average = 0.0;
};

/**
 * s_i = (b_i - a_i) / max(a_i, b_i) where a_i is the mean distance to the rest of
 * i's cluster and b_i the smallest mean distance to another cluster. Singletons
 * and the a = b = 0 case give 0.
 */
inline SilhouetteResult silhouette_widths(const DistanceMatrix& dm, const Labels& labels) {
    const Index n = dm.size();
    require(static_cast<Index>(labels.size()) == n, ErrorCode::DimensionMismatch, "label count differs from distance matrix size");
    std::map<int, int> slot;
    for (int l : labels) slot.emplace(l, 0);
    require(slot.size() >= 2, ErrorCode::SingleCluster, "silhouette needs at least two clusters");
    int next = 0;
    for (auto& [l, s] : slot) s = next++;
    const auto a_count = static_cast<Index>(slot.size());

    std::vector<Index> sizes(static_cast<std::size_t>(a_count), 0);
    for (int l : labels) ++sizes[static_cast<std::size_t>(slot[l])];

    SilhouetteResult out;
    out.widths.resize(static_cast<std::size_t>(n));
    Vector sums(a_count);
    for (Index i = 0; i < n; ++i) {
        sums.setZero();
        for (Index j = 0; j < n; ++j) {
            if (j != i) sums(slot[labels[static_cast<std::size_t>(j)]]) += dm(i, j);
        }
        const int own = slot[labels[static_cast<std::size_t>(i)]];
        const Index own_size = sizes[static_cast<std::size_t>(own)];
        double s = 0.0;
        if (own_size > 1) {
            const double a = sums(own) / static_cast<double>(own_size - 1);
            double b = std::numeric_limits<double>::infinity();
            for (Index c = 0; c < a_count; ++c) {
                if (c != own) b = std::min(b, sums(c) / static_cast<double>(sizes[static_cast<std::size_t>(c)]));
            }
            const double denom = std::max(a, b);
            s = denom > 0.0 ? (b - a) / denom : 0.0;
        }
        out.widths[static_cast<std::size_t>(i)] = s;
        out.average += s;
    }
    out.average /= static_cast<double>(n);
    return out;
}

/// Curves over k used to choose the cluster count.
struct ClusterSelection {
    std::vector<int> k_values;
    std::vector<double> wss;
    std::vector<std::optional<double>> avg_silhouette;
    std::vector<std::optional<double>> bic;
    std::vector<std::optional<double>> aic;
    int recommended_k = 0;
    bool low_confidence = false;
    std::string method = "wss_knee";
    std::vector<std::string> warnings;
};

/// WSS for k = 1..k_max from `kmeans_fit`; every k uses the same seed, keyed further by k inside kmeans_fit.
inline ClusterSelection wss_curve(const FeatureMatrix& fm, int k_max, std::uint64_t seed, int restarts = 10, unsigned workers = 1) {
    require(k_max >= 1, ErrorCode::InvalidArgument, "k_max must be at least 1");
    require(k_max <= fm.rows(), ErrorCode::KTooLarge, "k_max exceeds the number of samples");
    ClusterSelection sel;
    for (int k = 1; k <= k_max; ++k) {
        sel.k_values.push_back(k);
        sel.wss.push_back(kmeans_fit(fm, k, seed, restarts, 300, workers).wss);
    }
    sel.avg_silhouette.assign(sel.k_values.size(), std::nullopt);
    sel.bic.assign(sel.k_values.size(), std::nullopt);
    sel.aic.assign(sel.k_values.size(), std::nullopt);
    return sel;
}

struct KneeRecommendation {
    int k = 0;
    bool low_confidence = false;
};

/**
 * Knee of the WSS curve: the point farthest below the chord joining its first and
 * last points. Ties go to the smaller k. A curve with no point below the chord
 * yields the smallest interior k, flagged low-confidence.
 */
inline KneeRecommendation recommend_k(const ClusterSelection& sel) {
    const std::size_t m = sel.k_values.size();
    require(m >= 3 && sel.wss.size() == m, ErrorCode::TooFewPoints, "knee detection needs at least three k values");
    const double k0 = sel.k_values.front(), k1 = sel.k_values.back();
    const double w0 = sel.wss.front(), w1 = sel.wss.back();
    const double len = std::hypot(k1 - k0, w1 - w0);
    double scale = 0.0;
    for (double w : sel.wss) scale = std::max(scale, std::abs(w));
    const double tol = 1e-9 * std::max(scale, 1e-300);

    KneeRecommendation rec{sel.k_values[1], true};
    double best = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const double kx = sel.k_values[i];
        const double chord = w0 + (w1 - w0) * (kx - k0) / (k1 - k0);
        // Perpendicular distance is the vertical gap times a constant factor for a fixed chord.
        const double below = (chord - sel.wss[i]) * (k1 - k0) / len;
        if (below > best + tol) {
            best = below;
            rec = {sel.k_values[i], false};
        }
    }
    return rec;
}

struct SelectionOptions {
    int k_max = 10;
    std::uint64_t seed = 0;
    int restarts = 10;
    bool with_gmm_criteria = true;
    GmmOptions gmm;
    unsigned workers = 1;
};

/**
 * Full selection table: WSS, average silhouette of the k-means partition (k ≥ 2),
 * GMM BIC/AIC per k, and the WSS-knee recommendation.
 */
inline ClusterSelection select_k(const FeatureMatrix& fm, const SelectionOptions& opts) {
    require(opts.k_max >= 3, ErrorCode::TooFewPoints, "k_max must be at least 3 to locate a knee");
    require(opts.k_max <= fm.rows(), ErrorCode::KTooLarge, "k_max exceeds the number of samples");
    const auto dm = distance_matrix(fm, Metric::euclidean);
    ClusterSelection sel;
    sel.method = "wss_knee";
    for (int k = 1; k <= opts.k_max; ++k) {
        const auto km = kmeans_fit(fm, k, opts.seed, opts.restarts, 300, opts.workers);
        sel.k_values.push_back(k);
        sel.wss.push_back(km.wss);
        if (k >= 2 && count_distinct(km.labels) >= 2) {
            sel.avg_silhouette.push_back(silhouette_widths(dm, km.labels).average);
        } else {
            sel.avg_silhouette.push_back(std::nullopt);
        }
        if (opts.with_gmm_criteria) {
            try {
                GmmOptions g = opts.gmm;
                g.seed = opts.seed;
                const auto model = gmm_fit(fm, k, g);
                sel.bic.push_back(model.bic);
                sel.aic.push_back(model.aic);
            } catch (const Error& e) {
                sel.bic.push_back(std::nullopt);
                sel.aic.push_back(std::nullopt);
                sel.warnings.push_back("select_k: GMM for k=" + std::to_string(k) + " failed (" + e.what() + ")");
            }
        } else {
            sel.bic.push_back(std::nullopt);
            sel.aic.push_back(std::nullopt);
        }
    }
    const auto rec = recommend_k(sel);
    sel.recommended_k = rec.k;
    sel.low_confidence = rec.low_confidence;
    if (rec.low_confidence) sel.warnings.push_back("LowConfidence: WSS curve has no clear knee; using k=" + std::to_string(rec.k));
    return sel;
}

}  // namespace faultdx

#endif
