#ifndef FAULTDX_HYPOTEST_HPP
#define FAULTDX_HYPOTEST_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "distance.hpp"
#include "distributions.hpp"
#include "ordination.hpp"
#include "rng.hpp"

/**
 * @file hypotest.hpp
 * @brief Normality and variance-homogeneity tests, PERMANOVA, the PCoA-based
 * dispersion test and its pairwise table.
 *
 * All permutation p-values use p = (1 + exceedances) / (1 + B), with ties
 * counted as exceedances. Permutation b of a test is keyed on (seed, b), so the
 * result does not depend on the worker count.
 */

namespace faultdx {

/// Group structure of n labelled samples.
class GroupLabels {
public:
    GroupLabels() = default;

    explicit GroupLabels(Labels labels) : labels_(std::move(labels)) {
        std::map<int, Index> counts;
        for (int l : labels_) ++counts[l];
        for (const auto& [g, c] : counts) {
            groups_.push_back(g);
            sizes_.push_back(c);
        }
        index_.resize(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            index_[i] = static_cast<int>(std::lower_bound(groups_.begin(), groups_.end(), labels_[i]) - groups_.begin());
        }
    }

    const Labels& labels() const noexcept { return labels_; }
    const std::vector<int>& groups() const noexcept { return groups_; }
    const std::vector<Index>& sizes() const noexcept { return sizes_; }
    /// Dense group index (0..a-1) of every sample.
    const std::vector<int>& group_index() const noexcept { return index_; }
    std::size_t group_count() const noexcept { return groups_.size(); }
    Index n() const noexcept { return static_cast<Index>(labels_.size()); }

    std::vector<Index> members(std::size_t g) const {
        std::vector<Index> out;
        for (std::size_t i = 0; i < index_.size(); ++i) {
            if (index_[i] == static_cast<int>(g)) out.push_back(static_cast<Index>(i));
        }
        return out;
    }

private:
    Labels labels_;
    std::vector<int> groups_;
    std::vector<Index> sizes_;
    std::vector<int> index_;
};

struct PermTestResult {
    double statistic = 0.0;
    std::size_t permutations = 0;
    std::size_t exceedances = 0;
    double p_value = 1.0;
    std::uint64_t seed = 0;
    std::optional<double> parametric_p;
};

struct PermutationOptions {
    std::size_t permutations = 999;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

namespace detail {

inline constexpr std::uint64_t kPermanovaStream = 0x7065726d616e6f76ULL;
inline constexpr std::uint64_t kPermdispStream = 0x7065726d64697370ULL;
inline constexpr std::uint64_t kPairwiseStream = 0x7061697277697365ULL;

/// A permuted statistic counts as an exceedance when it reaches the observed one up to rounding.
inline bool reaches(double permuted, double observed) {
    if (std::isinf(observed)) return permuted >= observed;
    return permuted >= observed - 1e-9 * std::max(1.0, std::abs(observed));
}

/**
 * Evaluate `stat(perm)` for B seeded permutations of 0..n-1 and count exceedances.
 * `key` namespaces the permutation stream so different tests never share draws.
 */
template <typename Stat>
PermTestResult permutation_test(double observed, Index n, const PermutationOptions& opts, std::initializer_list<std::uint64_t> key, Stat&& stat) {
    require(opts.permutations >= 1, ErrorCode::InvalidArgument, "need at least one permutation");
    const std::uint64_t stream_seed = derive_key(opts.seed, key);
    std::vector<double> permuted(opts.permutations);
    parallel_for(opts.permutations, opts.workers, [&](std::size_t b) {
        permuted[b] = stat(permutation_at(stream_seed, n, b));
    });
    PermTestResult res;
    res.statistic = observed;
    res.permutations = opts.permutations;
    res.seed = opts.seed;
    for (double f : permuted) {
        if (reaches(f, observed)) ++res.exceedances;
    }
    res.p_value = static_cast<double>(1 + res.exceedances) / static_cast<double>(1 + res.permutations);
    return res;
}

/// One-way ANOVA F of values grouped by dense index `group[i]` (a groups).
struct AnovaTable {
    double ss_between = 0.0;
    double ss_within = 0.0;
    double f = 0.0;
};

inline AnovaTable one_way_anova(const Vector& values, const std::vector<int>& group, std::size_t a) {
    const Index n = values.size();
    std::vector<double> sums(a, 0.0);
    std::vector<double> counts(a, 0.0);
    for (Index i = 0; i < n; ++i) {
        sums[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])] += values(i);
        counts[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])] += 1.0;
    }
    const double grand = values.mean();
    AnovaTable t;
    for (std::size_t g = 0; g < a; ++g) {
        const double m = sums[g] / counts[g];
        t.ss_between += counts[g] * (m - grand) * (m - grand);
    }
    for (Index i = 0; i < n; ++i) {
        const auto g = static_cast<std::size_t>(group[static_cast<std::size_t>(i)]);
        const double d = values(i) - sums[g] / counts[g];
        t.ss_within += d * d;
    }
    const double df_b = static_cast<double>(a) - 1.0;
    const double df_w = static_cast<double>(n) - static_cast<double>(a);
    t.f = t.ss_within > 0.0 ? (t.ss_between / df_b) / (t.ss_within / df_w) : std::numeric_limits<double>::infinity();
    return t;
}

struct WelchT {
    double t = 0.0;
    double df = 1.0;
};

inline WelchT welch_t(const std::vector<double>& x, const std::vector<double>& y) {
    auto moments = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double e : v) m += e;
        m /= static_cast<double>(v.size());
        double s = 0.0;
        for (double e : v) s += (e - m) * (e - m);
        return std::pair{m, s / static_cast<double>(v.size() - 1)};
    };
    const auto [mx, vx] = moments(x);
    const auto [my, vy] = moments(y);
    const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
    const double ax = vx / nx, ay = vy / ny;
    WelchT w;
    const double se2 = ax + ay;
    if (se2 <= 0.0) {
        w.t = mx == my ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), mx - my);
        w.df = nx + ny - 2.0;
        return w;
    }
    w.t = (mx - my) / std::sqrt(se2);
    w.df = se2 * se2 / (ax * ax / (nx - 1.0) + ay * ay / (ny - 1.0));
    return w;
}

}  // namespace detail

struct ShapiroWilkResult {
    double w = 0.0;
    double p_value = 1.0;
    Index n = 0;
};

/**
 * @brief Shapiro-Wilk W and its p-value by Royston's AS R94 approximation.
 *
 * Valid for 3 ≤ n ≤ 5000.
 */
inline ShapiroWilkResult shapiro_wilk(std::vector<double> x) {
    const std::size_t n = x.size();
    require(n >= 3, ErrorCode::SampleTooSmall, "Shapiro-Wilk needs n >= 3");
    require(n <= 5000, ErrorCode::SampleTooLarge, "Shapiro-Wilk approximation is valid up to n = 5000");
    for (double v : x) require(std::isfinite(v), ErrorCode::InvalidArgument, "Shapiro-Wilk input has non-finite values");
    std::sort(x.begin(), x.end());
    const double range = x.back() - x.front();
    require(range > 0.0, ErrorCode::ZeroRange, "all values are identical");

    auto poly = [](std::initializer_list<double> c, double v) {
        // c0 + c1 v + c2 v² + ...
        double acc = 0.0;
        double pw = 1.0;
        for (double ci : c) {
            acc += ci * pw;
            pw *= v;
        }
        return acc;
    };

    const double an = static_cast<double>(n);
    const std::size_t half = n / 2;
    std::vector<double> a(half + 1, 0.0);  // 1-based weights for the lower half, sign-flipped
    if (n == 3) {
        a[1] = std::sqrt(0.5);
    } else {
        std::vector<double> m(half + 1);
        double summ2 = 0.0;
        for (std::size_t i = 1; i <= half; ++i) {
            m[i] = normal_quantile((static_cast<double>(i) - 0.375) / (an + 0.25));
            summ2 += m[i] * m[i];
        }
        summ2 *= 2.0;
        const double ssumm2 = std::sqrt(summ2);
        const double rsn = 1.0 / std::sqrt(an);
        const double a1 = poly({0.0, 0.221157, -0.147981, -2.07119, 4.434685, -2.706056}, rsn) - m[1] / ssumm2;
        std::size_t first = 2;
        double fac = 0.0;
        if (n > 5) {
            first = 3;
            const double a2 = -m[2] / ssumm2 + poly({0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633}, rsn);
            fac = std::sqrt((summ2 - 2.0 * m[1] * m[1] - 2.0 * m[2] * m[2]) / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
            a[2] = a2;
        } else {
            fac = std::sqrt((summ2 - 2.0 * m[1] * m[1]) / (1.0 - 2.0 * a1 * a1));
        }
        a[1] = a1;
        for (std::size_t i = first; i <= half; ++i) a[i] = -m[i] / fac;
    }

    // W as the squared correlation between the weights and the range-scaled order statistics.
    std::vector<double> coef(n, 0.0);
    for (std::size_t i = 0; i < half; ++i) {
        coef[i] = -a[i + 1];
        coef[n - 1 - i] = a[i + 1];
    }
    double sa = 0.0, sx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += coef[i];
        sx += x[i] / range;
    }
    sa /= an;
    sx /= an;
    double ssa = 0.0, ssx = 0.0, sax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double asa = coef[i] - sa;
        const double xsx = x[i] / range - sx;
        ssa += asa * asa;
        ssx += xsx * xsx;
        sax += asa * xsx;
    }
    const double ssassx = std::sqrt(ssa * ssx);
    const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);

    ShapiroWilkResult res;
    res.n = static_cast<Index>(n);
    res.w = 1.0 - w1;

    if (n == 3) {
        const double pi6 = 6.0 / 3.14159265358979323846;
        const double stqr = 3.14159265358979323846 / 3.0;
        res.p_value = std::max(0.0, pi6 * (std::asin(std::sqrt(res.w)) - stqr));
        return res;
    }
    double y = std::log(w1);
    const double lxx = std::log(an);
    double mean = 0.0, sd = 1.0;
    if (n <= 11) {
        const double gamma = poly({-2.273, 0.459}, an);
        if (y >= gamma) {
            res.p_value = 1e-99;
            return res;
        }
        y = -std::log(gamma - y);
        mean = poly({0.544, -0.39978, 0.025054, -6.714e-4}, an);
        sd = std::exp(poly({1.3822, -0.77857, 0.062767, -0.0020322}, an));
    } else {
        mean = poly({-1.5861, -0.31082, -0.083751, 0.0038915}, lxx);
        sd = std::exp(poly({-0.4803, -0.082676, 0.0030302}, lxx));
    }
    res.p_value = normal_sf(y, mean, sd);
    return res;
}

struct BartlettResult {
    double k_squared = 0.0;
    int df = 0;
    double p_value = 1.0;
};

/// Bartlett's test of equal variances across groups, chi-squared reference with a-1 df.
inline BartlettResult bartlett_test(const std::vector<std::vector<double>>& groups) {
    const std::size_t a = groups.size();
    require(a >= 2, ErrorCode::SingleGroup, "Bartlett's test needs at least two groups");
    double big_n = 0.0, pooled = 0.0, sum_log = 0.0, sum_inv = 0.0;
    for (const auto& g : groups) {
        require(g.size() >= 2, ErrorCode::TooFewSamples, "every group needs at least two values");
        const double ng = static_cast<double>(g.size());
        double m = 0.0;
        for (double v : g) m += v;
        m /= ng;
        double s2 = 0.0;
        for (double v : g) s2 += (v - m) * (v - m);
        s2 /= ng - 1.0;
        require(s2 > 0.0, ErrorCode::ZeroVariance, "a group has zero variance");
        big_n += ng;
        pooled += (ng - 1.0) * s2;
        sum_log += (ng - 1.0) * std::log(s2);
        sum_inv += 1.0 / (ng - 1.0);
    }
    const double da = static_cast<double>(a);
    const double dfw = big_n - da;
    pooled /= dfw;
    const double c = 1.0 + (sum_inv - 1.0 / dfw) / (3.0 * (da - 1.0));
    BartlettResult r;
    r.k_squared = (dfw * std::log(pooled) - sum_log) / c;
    r.df = static_cast<int>(a) - 1;
    r.p_value = chi2_sf(r.k_squared, static_cast<double>(r.df));
    return r;
}

struct PermanovaResult {
    double ss_total = 0.0;
    double ss_among = 0.0;
    double ss_within = 0.0;
    Index df_among = 0;
    Index df_within = 0;
    double pseudo_f = 0.0;
    PermTestResult test;
};

namespace detail {

/// Σ_g (1/n_g) Σ_{i<j in g} d²_ij for dense group indices.
inline double permanova_within(const Matrix& d2, const std::vector<int>& group, const std::vector<Index>& sizes) {
    std::vector<double> acc(sizes.size(), 0.0);
    const Index n = d2.rows();
    for (Index j = 1; j < n; ++j) {
        const int gj = group[static_cast<std::size_t>(j)];
        for (Index i = 0; i < j; ++i) {
            if (group[static_cast<std::size_t>(i)] == gj) acc[static_cast<std::size_t>(gj)] += d2(i, j);
        }
    }
    double ss = 0.0;
    for (std::size_t g = 0; g < sizes.size(); ++g) ss += acc[g] / static_cast<double>(sizes[g]);
    return ss;
}

}  // namespace detail

/**
 * Single-factor PERMANOVA. SS_T = (1/N)Σ_{i<j} d², SS_W = Σ_g (1/n_g)Σ_{i<j∈g} d²,
 * pseudo-F = (SS_A/(a-1)) / (SS_W/(N-a)); labels are permuted B times.
 */
inline PermanovaResult permanova(const DistanceMatrix& dm, const GroupLabels& groups, const PermutationOptions& opts) {
    const Index n = dm.size();
    require(groups.n() == n, ErrorCode::DimensionMismatch, "label count differs from distance matrix size");
    require(groups.group_count() >= 2, ErrorCode::SingleGroup, "PERMANOVA needs at least two groups");
    const auto a = static_cast<Index>(groups.group_count());
    require(n > a, ErrorCode::TooFewSamples, "PERMANOVA needs more samples than groups");

    const Matrix d2 = dm.values().array().square();
    double total = 0.0;
    for (Index j = 1; j < n; ++j) {
        for (Index i = 0; i < j; ++i) total += d2(i, j);
    }

    PermanovaResult r;
    r.ss_total = total / static_cast<double>(n);
    require(r.ss_total > 0.0, ErrorCode::ZeroTotalVariation, "all samples are identical");
    r.df_among = a - 1;
    r.df_within = n - a;

    auto f_of = [&](const std::vector<int>& group, double& ssw) {
        ssw = detail::permanova_within(d2, group, groups.sizes());
        const double ssa = r.ss_total - ssw;
        if (ssw <= 0.0) return std::numeric_limits<double>::infinity();
        return (ssa / static_cast<double>(r.df_among)) / (ssw / static_cast<double>(r.df_within));
    };

    r.pseudo_f = f_of(groups.group_index(), r.ss_within);
    r.ss_among = r.ss_total - r.ss_within;
    r.test = detail::permutation_test(r.pseudo_f, n, opts, {detail::kPermanovaStream}, [&](const std::vector<Index>& perm) {
        std::vector<int> permuted(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i) permuted[static_cast<std::size_t>(i)] = groups.group_index()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        double ssw = 0.0;
        return f_of(permuted, ssw);
    });
    return r;
}

struct DispersionResult {
    std::vector<double> centroid_distances;
    std::vector<double> group_mean_distances;
    std::vector<int> groups;
    double ss_between = 0.0;
    double ss_within = 0.0;
    Index df_between = 0;
    Index df_within = 0;
    double anova_f = 0.0;
    PermTestResult test;
    /// a×a: lower triangle observed (Welch) p, upper triangle permuted p, NaN diagonal.
    Matrix pairwise;
    std::size_t clamped_count = 0;
    std::vector<std::string> warnings;
};

/// Distances z_i of each sample to its group centroid in PCoA space (real minus imaginary part, clamped at 0).
struct CentroidDistances {
    std::vector<double> z;
    std::size_t clamped = 0;
};

inline CentroidDistances centroid_distances(const OrdinationResult& ord, const GroupLabels& groups) {
    const Index n = groups.n();
    const std::size_t a = groups.group_count();
    const auto& gi = groups.group_index();
    auto centroids = [&](const Matrix& coords) {
        Matrix c = Matrix::Zero(static_cast<Index>(a), coords.cols());
        for (Index i = 0; i < n; ++i) c.row(gi[static_cast<std::size_t>(i)]) += coords.row(i);
        for (std::size_t g = 0; g < a; ++g) c.row(static_cast<Index>(g)) /= static_cast<double>(groups.sizes()[g]);
        return c;
    };
    const Matrix re_c = centroids(ord.coords);
    const Matrix im_c = centroids(ord.imaginary_coords);
    CentroidDistances out;
    out.z.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const int g = gi[static_cast<std::size_t>(i)];
        double z2 = (ord.coords.row(i) - re_c.row(g)).squaredNorm();
        if (ord.imaginary_coords.cols() > 0) z2 -= (ord.imaginary_coords.row(i) - im_c.row(g)).squaredNorm();
        if (z2 < 0.0) {
            z2 = 0.0;
            ++out.clamped;
        }
        out.z[static_cast<std::size_t>(i)] = std::sqrt(z2);
    }
    return out;
}

/**
 * Pairwise dispersion comparisons: Welch two-sided p (lower triangle) and a label
 * permutation p on |t| within the pooled pair (upper triangle, keyed on (seed, i, j)).
 */
inline Matrix pairwise_dispersion_table(const std::vector<double>& z, const GroupLabels& groups, const PermutationOptions& opts) {
    const std::size_t a = groups.group_count();
    require(a >= 2, ErrorCode::SingleGroup, "pairwise table needs at least two groups");
    require(static_cast<Index>(z.size()) == groups.n(), ErrorCode::DimensionMismatch, "distance count differs from label count");
    Matrix table = Matrix::Constant(static_cast<Index>(a), static_cast<Index>(a), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t gi = 0; gi < a; ++gi) {
        for (std::size_t gj = gi + 1; gj < a; ++gj) {
            const auto mi = groups.members(gi);
            const auto mj = groups.members(gj);
            require(mi.size() >= 2 && mj.size() >= 2, ErrorCode::TooFewSamples, "pairwise comparison needs at least two samples per group");
            std::vector<double> pooled;
            for (Index i : mi) pooled.push_back(z[static_cast<std::size_t>(i)]);
            for (Index j : mj) pooled.push_back(z[static_cast<std::size_t>(j)]);
            const std::size_t ni = mi.size();
            auto split_t = [&](const std::vector<Index>& order) {
                std::vector<double> x, y;
                for (std::size_t k = 0; k < order.size(); ++k) {
                    (k < ni ? x : y).push_back(pooled[static_cast<std::size_t>(order[k])]);
                }
                return detail::welch_t(x, y);
            };
            std::vector<Index> identity(pooled.size());
            for (std::size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<Index>(k);
            const auto obs = split_t(identity);
            const double obs_abs = std::abs(obs.t);
            table(static_cast<Index>(gj), static_cast<Index>(gi)) = std::isinf(obs_abs) ? 0.0 : std::min(1.0, 2.0 * t_sf(obs_abs, obs.df));
            const auto perm = detail::permutation_test(obs_abs, static_cast<Index>(pooled.size()), opts, {detail::kPairwiseStream, gi, gj},
                                                       [&](const std::vector<Index>& order) { return std::abs(split_t(order).t); });
            table(static_cast<Index>(gi), static_cast<Index>(gj)) = perm.p_value;
        }
    }
    return table;
}

/**
 * Homogeneity of multivariate dispersions: PCoA of D, distances to arithmetic group
 * centroids (imaginary axes subtract), one-way ANOVA F on those distances with an
 * F-distribution p and a label-permutation p, plus the pairwise table.
 */
inline DispersionResult permdisp(const DistanceMatrix& dm, const GroupLabels& groups, const PermutationOptions& opts) {
    const Index n = dm.size();
    require(groups.n() == n, ErrorCode::DimensionMismatch, "label count differs from distance matrix size");
    const std::size_t a = groups.group_count();
    require(a >= 2, ErrorCode::SingleGroup, "dispersion test needs at least two groups");
    for (Index s : groups.sizes()) require(s >= 2, ErrorCode::TooFewSamples, "every group needs at least two samples");

    const auto ord = pcoa(dm);
    auto cd = centroid_distances(ord, groups);

    DispersionResult r;
    r.groups = groups.groups();
    r.centroid_distances = cd.z;
    r.clamped_count = cd.clamped;
    if (cd.clamped > 0) {
        r.warnings.push_back("permdisp: " + std::to_string(cd.clamped) + " negative squared centroid distance(s) clamped to 0");
    }
    r.group_mean_distances.assign(a, 0.0);
    for (Index i = 0; i < n; ++i) r.group_mean_distances[static_cast<std::size_t>(groups.group_index()[static_cast<std::size_t>(i)])] += cd.z[static_cast<std::size_t>(i)];
    for (std::size_t g = 0; g < a; ++g) r.group_mean_distances[g] /= static_cast<double>(groups.sizes()[g]);

    const Vector zv = Eigen::Map<const Vector>(cd.z.data(), n);
    const auto table = detail::one_way_anova(zv, groups.group_index(), a);
    require(table.ss_within > 1e-20 * zv.squaredNorm(), ErrorCode::ZeroResidual, "all within-group centroid-distance variation is zero");
    r.ss_between = table.ss_between;
    r.ss_within = table.ss_within;
    r.df_between = static_cast<Index>(a) - 1;
    r.df_within = n - static_cast<Index>(a);
    r.anova_f = table.f;

    r.test = detail::permutation_test(r.anova_f, n, opts, {detail::kPermdispStream}, [&](const std::vector<Index>& perm) {
        std::vector<int> permuted(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i) permuted[static_cast<std::size_t>(i)] = groups.group_index()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        return detail::one_way_anova(zv, permuted, a).f;
    });
    r.test.parametric_p = f_sf(r.anova_f, static_cast<double>(r.df_between), static_cast<double>(r.df_within));
    r.pairwise = pairwise_dispersion_table(cd.z, groups, opts);
    return r;
}

}  // namespace faultdx

#endif
