#ifndef FAULTDX_FEATURES_HPP
#define FAULTDX_FEATURES_HPP

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "rng.hpp"

/**
 * @file features.hpp
 * @brief Time-domain statistics, amplitude spectra, band amplitudes and the
 * per-observation feature matrix built from vibration windows.
 */

namespace faultdx {

/// One channel of raw acceleration samples.
struct TimeSeriesWindow {
    std::vector<double> samples;
    double sampling_rate_hz = 0.0;
    std::string channel_id;
    std::int64_t timestamp = 0;

    void validate() const {
        require(samples.size() >= 4, ErrorCode::TooFewSamples, "window '" + channel_id + "' needs at least 4 samples");
        require(sampling_rate_hz > 0.0 && std::isfinite(sampling_rate_hz), ErrorCode::InvalidArgument, "sampling rate must be positive");
        for (double s : samples) {
            require(std::isfinite(s), ErrorCode::InvalidArgument, "window '" + channel_id + "' has non-finite samples");
        }
    }
};

inline constexpr std::array<const char*, 9> kTimeFeatureNames = {
    "mean", "median", "min", "max", "kurtosis", "skewness", "std", "rms", "range"};

/**
 * @brief The nine time-domain statistics of one window.
 *
 * `kurtosis` and `skewness` are empty when the window has zero variance.
 */
struct TimeFeatures {
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::optional<double> kurtosis;
    std::optional<double> skewness;
    double std = 0.0;
    double rms = 0.0;
    double range = 0.0;

    bool zero_variance() const noexcept { return !kurtosis.has_value(); }

    /// Values in `kTimeFeatureNames` order; undefined moments are written as `undefined_fill`.
    std::array<double, 9> as_array(double undefined_fill = 0.0) const {
        return {mean, median, min, max, kurtosis.value_or(undefined_fill), skewness.value_or(undefined_fill), std, rms, range};
    }
};

/**
 * Sample statistics of a window. Kurtosis is the bias-adjusted sample excess
 * kurtosis G2 and skewness the adjusted Fisher-Pearson coefficient G1; both
 * are computed from central moments about the mean.
 */
inline TimeFeatures time_domain_features(const TimeSeriesWindow& window) {
    window.validate();
    const auto& x = window.samples;
    const double n = static_cast<double>(x.size());

    TimeFeatures f;
    const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
    f.min = *mn;
    f.max = *mx;
    f.range = f.max - f.min;

    double sum = 0.0, sumsq = 0.0;
    for (double v : x) {
        sum += v;
        sumsq += v * v;
    }
    f.mean = sum / n;
    f.rms = std::sqrt(sumsq / n);

    std::vector<double> sorted(x);
    const std::size_t mid = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
    if (sorted.size() % 2 == 1) {
        f.median = sorted[mid];
    } else {
        const double upper = sorted[mid];
        const double lower = *std::max_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid));
        f.median = 0.5 * (lower + upper);
    }

    if (f.range == 0.0) {
        f.std = 0.0;
        return f;
    }

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - f.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    f.std = std::sqrt(m2 / (n - 1.0));
    m2 /= n;
    m3 /= n;
    m4 /= n;

    const double g1 = m3 / std::pow(m2, 1.5);
    const double g2 = m4 / (m2 * m2) - 3.0;
    f.skewness = g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
    f.kurtosis = ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0));
    return f;
}

enum class Taper { none, hann };

/// One-sided amplitude spectrum; frequencies run from 0 to Nyquist.
struct Spectrum {
    std::vector<double> frequencies_hz;
    std::vector<double> amplitudes;
    double sampling_rate_hz = 0.0;
    std::size_t fft_size = 0;

    double resolution_hz() const { return sampling_rate_hz / static_cast<double>(fft_size); }
};

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// In-place iterative radix-2 decimation-in-time FFT; size must be a power of two.
inline void fft_inplace(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    require(n > 0 && (n & (n - 1)) == 0, ErrorCode::InvalidArgument, "FFT size must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    constexpr double kPi = 3.14159265358979323846;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        // Twiddles evaluated directly rather than by recurrence to avoid drift on long transforms.
        std::vector<std::complex<double>> tw(half);
        for (std::size_t k = 0; k < half; ++k) {
            const double ang = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(len);
            tw[k] = {std::cos(ang), std::sin(ang)};
        }
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + half] * tw[k];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

/**
 * @brief One-sided amplitude spectrum of a window.
 *
 * Samples are tapered, zero-padded to the next power of two N and transformed.
 * Amplitudes are |X_k|/W for the DC and Nyquist bins and 2|X_k|/W otherwise,
 * where W is the sum of the taper weights over the original samples (W = N for
 * an untapered power-of-two window). A sinusoid of amplitude A sitting exactly
 * on a bin therefore reads A.
 */
inline Spectrum spectrum(const TimeSeriesWindow& window, Taper taper = Taper::none) {
    window.validate();
    const std::size_t len = window.samples.size();
    const std::size_t n = next_pow2(len);

    std::vector<std::complex<double>> buf(n, {0.0, 0.0});
    double gain = 0.0;
    constexpr double kPi = 3.14159265358979323846;
    for (std::size_t i = 0; i < len; ++i) {
        double w = 1.0;
        if (taper == Taper::hann) {
            w = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(len));
        }
        gain += w;
        buf[i] = {window.samples[i] * w, 0.0};
    }
    fft_inplace(buf);

    Spectrum s;
    s.sampling_rate_hz = window.sampling_rate_hz;
    s.fft_size = n;
    const std::size_t bins = n / 2 + 1;
    s.frequencies_hz.resize(bins);
    s.amplitudes.resize(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        s.frequencies_hz[k] = static_cast<double>(k) * window.sampling_rate_hz / static_cast<double>(n);
        const double scale = (k == 0 || k == n / 2) ? 1.0 : 2.0;
        s.amplitudes[k] = scale * std::abs(buf[k]) / gain;
    }
    return s;
}

/// Largest amplitude among bins inside [center - halfwidth, center + halfwidth].
inline double band_amplitude(const Spectrum& spec, double center_hz, double halfwidth_hz) {
    require(!spec.frequencies_hz.empty(), ErrorCode::InvalidArgument, "empty spectrum");
    require(halfwidth_hz >= 0.0, ErrorCode::InvalidArgument, "band halfwidth must be nonnegative");
    const double lo = center_hz - halfwidth_hz;
    const double hi = center_hz + halfwidth_hz;
    require(lo >= 0.0 && hi <= spec.frequencies_hz.back(), ErrorCode::InvalidArgument,
            "band [" + std::to_string(lo) + ", " + std::to_string(hi) + "] Hz lies outside the spectrum");

    std::optional<double> best;
    for (std::size_t k = 0; k < spec.frequencies_hz.size(); ++k) {
        const double f = spec.frequencies_hz[k];
        if (f >= lo && f <= hi) {
            best = std::max(best.value_or(0.0), spec.amplitudes[k]);
        }
    }
    require(best.has_value(), ErrorCode::EmptyBand, "no spectral bin inside the requested band");
    return *best;
}

struct BandSpec {
    double center_hz = 0.0;
    double halfwidth_hz = 0.0;

    std::string name() const {
        std::ostringstream os;
        os << "band_" << center_hz << "Hz";
        return os.str();
    }
};

struct FeatureConfig {
    std::vector<BandSpec> bands;
    Taper taper = Taper::none;
    unsigned workers = 1;
};

/// All channels recorded for one observation.
struct Observation {
    std::string sample_id;
    std::int64_t timestamp = 0;
    std::vector<TimeSeriesWindow> channels;
};

/// Feature matrix plus notes about windows whose higher moments were undefined.
struct FeatureExtraction {
    FeatureMatrix matrix;
    std::vector<std::int64_t> timestamps;
    std::vector<std::string> warnings;
};

/**
 * Build one row per observation. Columns are channel-major: for each channel
 * (in the first observation's order) the nine time features then the configured
 * band amplitudes. Undefined kurtosis/skewness (constant windows) are stored as 0
 * and reported in `warnings`.
 */
inline FeatureExtraction build_feature_matrix(const std::vector<Observation>& observations, const FeatureConfig& config) {
    require(!observations.empty(), ErrorCode::InvalidArgument, "no observations");
    const auto& first = observations.front();
    require(!first.channels.empty(), ErrorCode::InvalidArgument, "observation '" + first.sample_id + "' has no channels");

    std::vector<std::string> channel_order;
    for (const auto& w : first.channels) channel_order.push_back(w.channel_id);
    {
        std::vector<std::string> sorted = channel_order;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::ChannelMismatch, "duplicate channel id in observation '" + first.sample_id + "'");
        for (const auto& obs : observations) {
            std::vector<std::string> ids;
            for (const auto& w : obs.channels) ids.push_back(w.channel_id);
            std::sort(ids.begin(), ids.end());
            require(ids == sorted, ErrorCode::ChannelMismatch, "observation '" + obs.sample_id + "' has a different channel set");
        }
    }

    const std::size_t per_channel = kTimeFeatureNames.size() + config.bands.size();
    const Index n = static_cast<Index>(observations.size());
    const Index p = static_cast<Index>(channel_order.size() * per_channel);

    std::vector<std::string> names;
    for (const auto& ch : channel_order) {
        for (const char* f : kTimeFeatureNames) names.push_back(ch + "_" + f);
        for (const auto& b : config.bands) names.push_back(ch + "_" + b.name());
    }

    Matrix values(n, p);
    std::vector<std::vector<std::string>> row_warnings(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), config.workers, [&](std::size_t i) {
        const auto& obs = observations[i];
        Index col = 0;
        for (const auto& ch : channel_order) {
            const auto& w = *std::find_if(obs.channels.begin(), obs.channels.end(), [&](const auto& c) { return c.channel_id == ch; });
            const auto tf = time_domain_features(w);
            if (tf.zero_variance()) {
                row_warnings[i].push_back("ZeroVariance: observation '" + obs.sample_id + "' channel '" + ch + "' is constant; kurtosis/skewness set to 0");
            }
            for (double v : tf.as_array()) values(static_cast<Index>(i), col++) = v;
            if (!config.bands.empty()) {
                const auto spec = spectrum(w, config.taper);
                for (const auto& b : config.bands) {
                    values(static_cast<Index>(i), col++) = band_amplitude(spec, b.center_hz, b.halfwidth_hz);
                }
            }
        }
    });

    FeatureExtraction out;
    std::vector<std::string> ids;
    for (const auto& obs : observations) {
        ids.push_back(obs.sample_id);
        out.timestamps.push_back(obs.timestamp);
    }
    for (auto& rw : row_warnings) {
        for (auto& w : rw) out.warnings.push_back(std::move(w));
    }
    out.matrix = FeatureMatrix(std::move(values), std::move(names), std::move(ids));
    return out;
}

enum class NormalizeMethod { zscore, minmax };

struct NormalizedFeatures {
    FeatureMatrix matrix;
    /// Columns that were constant and mapped to 0.
    std::vector<std::string> constant_columns;
};

inline NormalizedFeatures normalize_features(const FeatureMatrix& fm, NormalizeMethod method) {
    require(fm.rows() >= 2, ErrorCode::TooFewSamples, "normalization needs at least 2 rows");
    Matrix out = fm.values();
    NormalizedFeatures res;
    const double n = static_cast<double>(fm.rows());
    for (Index j = 0; j < out.cols(); ++j) {
        auto col = out.col(j);
        const double lo = col.minCoeff();
        const double hi = col.maxCoeff();
        if (lo == hi) {
            col.setZero();
            res.constant_columns.push_back(fm.feature_names()[static_cast<std::size_t>(j)]);
            continue;
        }
        if (method == NormalizeMethod::zscore) {
            const double mean = col.mean();
            const double sd = std::sqrt((col.array() - mean).square().sum() / (n - 1.0));
            col = (col.array() - mean) / sd;
        } else {
            col = (col.array() - lo) / (hi - lo);
        }
    }
    res.matrix = FeatureMatrix(std::move(out), fm.feature_names(), fm.sample_ids());
    return res;
}

/// Indicator matrix: row i has a single 1 in the column of `labels[i]` within `categories`.
template <typename T>
Matrix one_hot_encode(const std::vector<T>& labels, const std::vector<T>& categories) {
    std::map<T, Index> position;
    for (std::size_t c = 0; c < categories.size(); ++c) {
        require(position.emplace(categories[c], static_cast<Index>(c)).second, ErrorCode::InvalidArgument, "categories must be unique");
    }
    Matrix out = Matrix::Zero(static_cast<Index>(labels.size()), static_cast<Index>(categories.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = position.find(labels[i]);
        require(it != position.end(), ErrorCode::UnknownLabel, "label at row " + std::to_string(i) + " is not a known category");
        out(static_cast<Index>(i), it->second) = 1.0;
    }
    return out;
}

}  // namespace faultdx

#endif
