#ifndef FAULTDX_CORE_HPP
#define FAULTDX_CORE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

/**
 * @file core.hpp
 * @brief Shared matrix aliases, error type and the feature matrix container.
 */

namespace faultdx {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using Labels = std::vector<int>;

/**
 * Failure categories raised by the library. Each maps onto one CLI exit class
 * (see `exit_code_for()`).
 */
enum class ErrorCode {
    InvalidArgument,
    ChannelMismatch,
    EmptyBand,
    UnknownLabel,
    NegativeInput,
    KTooLarge,
    DegenerateComponent,
    DimensionMismatch,
    SingleCluster,
    TooFewPoints,
    TooFewSamples,
    InvalidParams,
    SampleTooSmall,
    SampleTooLarge,
    ZeroRange,
    ZeroVariance,
    ZeroTotalVariation,
    SingleGroup,
    ZeroResidual,
    AliasError,
    ConfigError,
    ParseError,
    MissingSection,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ChannelMismatch: return "ChannelMismatch";
        case ErrorCode::EmptyBand: return "EmptyBand";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::NegativeInput: return "NegativeInput";
        case ErrorCode::KTooLarge: return "KTooLarge";
        case ErrorCode::DegenerateComponent: return "DegenerateComponent";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingleCluster: return "SingleCluster";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::SampleTooSmall: return "SampleTooSmall";
        case ErrorCode::SampleTooLarge: return "SampleTooLarge";
        case ErrorCode::ZeroRange: return "ZeroRange";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::ZeroTotalVariation: return "ZeroTotalVariation";
        case ErrorCode::SingleGroup: return "SingleGroup";
        case ErrorCode::ZeroResidual: return "ZeroResidual";
        case ErrorCode::AliasError: return "AliasError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingSection: return "MissingSection";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

/// CLI exit classes: 2 config, 3 data, 4 numeric.
inline int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ConfigError:
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidParams:
        case ErrorCode::KTooLarge:
        case ErrorCode::AliasError:
            return 2;
        case ErrorCode::ParseError:
        case ErrorCode::ChannelMismatch:
        case ErrorCode::UnknownLabel:
        case ErrorCode::NegativeInput:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::EmptyBand:
        case ErrorCode::TooFewPoints:
        case ErrorCode::TooFewSamples:
        case ErrorCode::SampleTooSmall:
        case ErrorCode::SampleTooLarge:
        case ErrorCode::SingleGroup:
        case ErrorCode::SingleCluster:
        case ErrorCode::MissingSection:
            return 3;
        default:
            return 4;
    }
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
    if (!ok) {
        throw Error(code, what);
    }
}

/**
 * @brief n samples by p named features.
 *
 * Construction validates the invariants: finite entries, unique names, n,p >= 1.
 */
class FeatureMatrix {
public:
    FeatureMatrix() = default;

    FeatureMatrix(Matrix values, std::vector<std::string> feature_names, std::vector<std::string> sample_ids)
        : values_(std::move(values)), feature_names_(std::move(feature_names)), sample_ids_(std::move(sample_ids)) {
        require(values_.rows() >= 1 && values_.cols() >= 1, ErrorCode::InvalidArgument, "feature matrix must be at least 1x1");
        require(static_cast<Index>(feature_names_.size()) == values_.cols(), ErrorCode::DimensionMismatch, "feature name count differs from column count");
        require(static_cast<Index>(sample_ids_.size()) == values_.rows(), ErrorCode::DimensionMismatch, "sample id count differs from row count");
        require(values_.allFinite(), ErrorCode::InvalidArgument, "feature matrix contains non-finite values");
        std::unordered_set<std::string> seen;
        for (const auto& name : feature_names_) {
            require(seen.insert(name).second, ErrorCode::InvalidArgument, "duplicate feature name '" + name + "'");
        }
    }

    /// Convenience for tests and synthetic data: sample ids are "s0", "s1", ... and features "f0", "f1", ...
    static FeatureMatrix from_values(Matrix values) {
        std::vector<std::string> names, ids;
        for (Index j = 0; j < values.cols(); ++j) names.push_back("f" + std::to_string(j));
        for (Index i = 0; i < values.rows(); ++i) ids.push_back("s" + std::to_string(i));
        return FeatureMatrix(std::move(values), std::move(names), std::move(ids));
    }

    const Matrix& values() const noexcept { return values_; }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    const std::vector<std::string>& sample_ids() const noexcept { return sample_ids_; }
    Index rows() const noexcept { return values_.rows(); }
    Index cols() const noexcept { return values_.cols(); }

    /// Rows selected by index, in the given order.
    FeatureMatrix select_rows(const std::vector<Index>& rows) const {
        Matrix out(static_cast<Index>(rows.size()), values_.cols());
        std::vector<std::string> ids;
        ids.reserve(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out.row(static_cast<Index>(r)) = values_.row(rows[r]);
            ids.push_back(sample_ids_[static_cast<std::size_t>(rows[r])]);
        }
        return FeatureMatrix(std::move(out), feature_names_, std::move(ids));
    }

private:
    Matrix values_;
    std::vector<std::string> feature_names_;
    std::vector<std::string> sample_ids_;
};

/// Number of distinct values in a label vector.
inline std::size_t count_distinct(const Labels& labels) {
    std::unordered_set<int> s(labels.begin(), labels.end());
    return s.size();
}

}  // namespace faultdx

#endif
