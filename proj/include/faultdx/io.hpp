#ifndef FAULTDX_IO_HPP
#define FAULTDX_IO_HPP

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "cluster.hpp"
#include "core.hpp"
#include "distance.hpp"
#include "features.hpp"
#include "ordination.hpp"

/**
 * @file io.hpp
 * @brief CSV readers/writers for waveforms, manifests, features, distances,
 * coordinates, cluster assignments and selection curves.
 *
 * Numbers are written in shortest round-trip form so files are byte-stable.
 */

namespace faultdx::io {

namespace fs = std::filesystem;

inline std::string format_number(double v) {
    if (std::isnan(v)) return "NA";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_optional(const std::optional<double>& v) { return v ? format_number(*v) : "NA"; }

inline double parse_number(const std::string& s, const std::string& where) {
    std::string t = s;
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ')) t.pop_back();
    std::size_t start = 0;
    while (start < t.size() && t[start] == ' ') ++start;
    t = t.substr(start);
    if (t == "NA" || t == "NaN" || t == "nan") return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    const char* b = t.data();
    const char* e = t.data() + t.size();
    if (!t.empty() && *b == '+') ++b;
    const auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc() || res.ptr != e || t.empty()) {
        throw Error(ErrorCode::ParseError, "cannot parse number '" + s + "' in " + where);
    }
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

/// Rows of a CSV file; the first row is the header.
inline std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, "'" + path.string() + "' is empty");
    return rows;
}

inline void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot write '" + path.string() + "'");
    out << text;
}

/**
 * Waveform file: header `t_s,<channel>...`. The sampling rate is taken from
 * `sampling_rate_hz` when positive, otherwise from the spacing of `t_s`.
 * A positive `window_len` keeps only the first window_len samples.
 */
inline Observation read_waveform_csv(const fs::path& path, const std::string& sample_id, std::int64_t timestamp,
                                     double sampling_rate_hz = 0.0, std::size_t window_len = 0) {
    const auto rows = read_csv(path);
    const auto& header = rows.front();
    if (header.size() < 2 || header[0] != "t_s") {
        throw Error(ErrorCode::ParseError, "'" + path.string() + "' must start with a 't_s,<channel>...' header");
    }
    const std::size_t channels = header.size() - 1;
    std::vector<double> t;
    std::vector<std::vector<double>> data(channels);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (window_len > 0 && t.size() >= window_len) break;
        const auto& row = rows[r];
        if (row.size() != header.size()) {
            throw Error(ErrorCode::ParseError, path.string() + ": row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " fields");
        }
        const std::string where = path.string() + ":" + std::to_string(r + 1);
        t.push_back(parse_number(row[0], where));
        for (std::size_t c = 0; c < channels; ++c) data[c].push_back(parse_number(row[c + 1], where));
    }
    if (window_len > 0 && t.size() < window_len) {
        throw Error(ErrorCode::ParseError, path.string() + " has fewer than " + std::to_string(window_len) + " samples");
    }
    double fs_hz = sampling_rate_hz;
    if (fs_hz <= 0.0) {
        if (t.size() < 2 || !(t[1] > t[0])) throw Error(ErrorCode::ParseError, path.string() + ": cannot infer the sampling rate from t_s");
        fs_hz = static_cast<double>(t.size() - 1) / (t.back() - t.front());
    }
    Observation obs;
    obs.sample_id = sample_id;
    obs.timestamp = timestamp;
    for (std::size_t c = 0; c < channels; ++c) {
        TimeSeriesWindow w;
        w.channel_id = header[c + 1];
        w.sampling_rate_hz = fs_hz;
        w.timestamp = timestamp;
        w.samples = std::move(data[c]);
        obs.channels.push_back(std::move(w));
    }
    return obs;
}

inline void write_waveform_csv(const fs::path& path, const Observation& obs) {
    std::ostringstream os;
    os << "t_s";
    for (const auto& w : obs.channels) os << ',' << w.channel_id;
    os << '\n';
    const std::size_t len = obs.channels.front().samples.size();
    const double fs_hz = obs.channels.front().sampling_rate_hz;
    for (std::size_t i = 0; i < len; ++i) {
        os << format_number(static_cast<double>(i) / fs_hz);
        for (const auto& w : obs.channels) os << ',' << format_number(w.samples[i]);
        os << '\n';
    }
    write_text(path, os.str());
}

struct ManifestEntry {
    std::string sample_id;
    std::int64_t timestamp = 0;
    fs::path file_path;
};

/// Manifest `sample_id,timestamp,file_path`; relative paths resolve against the manifest's directory.
inline std::vector<ManifestEntry> read_manifest(const fs::path& path) {
    const auto rows = read_csv(path);
    const auto& h = rows.front();
    if (h.size() < 3 || h[0] != "sample_id" || h[1] != "timestamp" || h[2] != "file_path") {
        throw Error(ErrorCode::ParseError, "manifest header must be 'sample_id,timestamp,file_path'");
    }
    std::vector<ManifestEntry> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() < 3) throw Error(ErrorCode::ParseError, "manifest row " + std::to_string(r + 1) + " is short");
        ManifestEntry e;
        e.sample_id = row[0];
        e.timestamp = static_cast<std::int64_t>(parse_number(row[1], "manifest timestamp"));
        e.file_path = row[2];
        if (e.file_path.is_relative()) e.file_path = path.parent_path() / e.file_path;
        out.push_back(std::move(e));
    }
    return out;
}

inline void write_manifest(const fs::path& path, const std::vector<ManifestEntry>& entries) {
    std::ostringstream os;
    os << "sample_id,timestamp,file_path\n";
    for (const auto& e : entries) os << e.sample_id << ',' << e.timestamp << ',' << e.file_path.generic_string() << '\n';
    write_text(path, os.str());
}

inline std::vector<Observation> read_observations(const fs::path& manifest, double sampling_rate_hz = 0.0, std::size_t window_len = 0) {
    std::vector<Observation> out;
    for (const auto& e : read_manifest(manifest)) {
        out.push_back(read_waveform_csv(e.file_path, e.sample_id, e.timestamp, sampling_rate_hz, window_len));
    }
    return out;
}

inline std::string feature_csv(const FeatureMatrix& fm) {
    std::ostringstream os;
    os << "sample_id";
    for (const auto& n : fm.feature_names()) os << ',' << n;
    os << '\n';
    for (Index i = 0; i < fm.rows(); ++i) {
        os << fm.sample_ids()[static_cast<std::size_t>(i)];
        for (Index j = 0; j < fm.cols(); ++j) os << ',' << format_number(fm.values()(i, j));
        os << '\n';
    }
    return os.str();
}

inline void write_feature_csv(const fs::path& path, const FeatureMatrix& fm) { write_text(path, feature_csv(fm)); }

inline FeatureMatrix read_feature_csv(const fs::path& path) {
    const auto rows = read_csv(path);
    const auto& h = rows.front();
    if (h.size() < 2 || h[0] != "sample_id") throw Error(ErrorCode::ParseError, "feature CSV must start with a 'sample_id' column");
    std::vector<std::string> names(h.begin() + 1, h.end());
    Matrix v(static_cast<Index>(rows.size() - 1), static_cast<Index>(names.size()));
    std::vector<std::string> ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != h.size()) throw Error(ErrorCode::ParseError, path.string() + ": row " + std::to_string(r + 1) + " has the wrong field count");
        ids.push_back(rows[r][0]);
        for (std::size_t c = 0; c < names.size(); ++c) {
            v(static_cast<Index>(r - 1), static_cast<Index>(c)) = parse_number(rows[r][c + 1], path.string());
        }
    }
    if (!v.allFinite()) throw Error(ErrorCode::ParseError, path.string() + " contains non-finite feature values");
    return FeatureMatrix(std::move(v), std::move(names), std::move(ids));
}

inline void write_distance_csv(const fs::path& path, const DistanceMatrix& dm) {
    std::ostringstream os;
    os << "sample_id";
    for (const auto& id : dm.sample_ids()) os << ',' << id;
    os << '\n';
    for (Index i = 0; i < dm.size(); ++i) {
        os << dm.sample_ids()[static_cast<std::size_t>(i)];
        for (Index j = 0; j < dm.size(); ++j) os << ',' << format_number(dm(i, j));
        os << '\n';
    }
    write_text(path, os.str());
}

inline DistanceMatrix read_distance_csv(const fs::path& path, const std::string& metric_name = "custom") {
    const auto rows = read_csv(path);
    const auto& h = rows.front();
    const std::size_t n = h.size() - 1;
    if (h.empty() || h[0] != "sample_id" || rows.size() != n + 1) throw Error(ErrorCode::ParseError, "distance CSV must be square with a sample_id header");
    Matrix d(static_cast<Index>(n), static_cast<Index>(n));
    std::vector<std::string> ids(h.begin() + 1, h.end());
    for (std::size_t r = 1; r <= n; ++r) {
        if (rows[r].size() != n + 1 || rows[r][0] != ids[r - 1]) throw Error(ErrorCode::ParseError, "distance CSV row " + std::to_string(r + 1) + " is malformed");
        for (std::size_t c = 0; c < n; ++c) d(static_cast<Index>(r - 1), static_cast<Index>(c)) = parse_number(rows[r][c + 1], path.string());
    }
    try {
        return DistanceMatrix(std::move(d), metric_name, std::move(ids));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid distance matrix: ") + e.what());
    }
}

inline std::string coordinates_csv(const std::vector<std::string>& ids, const Matrix& coords) {
    std::ostringstream os;
    os << "sample_id";
    for (Index j = 0; j < coords.cols(); ++j) os << ",axis" << (j + 1);
    os << '\n';
    for (Index i = 0; i < coords.rows(); ++i) {
        os << ids[static_cast<std::size_t>(i)];
        for (Index j = 0; j < coords.cols(); ++j) os << ',' << format_number(coords(i, j));
        os << '\n';
    }
    return os.str();
}

/// `sample_id,timestamp,label,resp_1..resp_k`; labels written 1-based.
inline std::string assignments_csv(const std::vector<std::string>& ids, const std::vector<std::int64_t>& timestamps, const Labels& labels, const Matrix& resp) {
    std::ostringstream os;
    os << "sample_id,timestamp,label";
    for (Index c = 0; c < resp.cols(); ++c) os << ",resp_" << (c + 1);
    os << '\n';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        os << ids[i] << ',';
        if (i < timestamps.size()) os << timestamps[i];
        os << ',' << (labels[i] + 1);
        for (Index c = 0; c < resp.cols(); ++c) os << ',' << format_number(resp(static_cast<Index>(i), c));
        os << '\n';
    }
    return os.str();
}

/// `k,wss,avg_silhouette,bic,aic`.
inline std::string selection_csv(const ClusterSelection& sel) {
    std::ostringstream os;
    os << "k,wss,avg_silhouette,bic,aic\n";
    for (std::size_t i = 0; i < sel.k_values.size(); ++i) {
        os << sel.k_values[i] << ',' << format_number(sel.wss[i]) << ',' << format_optional(sel.avg_silhouette[i]) << ','
           << format_optional(sel.bic[i]) << ',' << format_optional(sel.aic[i]) << '\n';
    }
    return os.str();
}

/// Two-column `sample_id,label` files used to feed group labels to the tests.
inline std::vector<std::pair<std::string, int>> read_labels_csv(const fs::path& path) {
    const auto rows = read_csv(path);
    const auto& h = rows.front();
    std::size_t label_col = 0;
    for (std::size_t c = 0; c < h.size(); ++c) {
        if (h[c] == "label") label_col = c;
    }
    if (h.empty() || h[0] != "sample_id" || label_col == 0) throw Error(ErrorCode::ParseError, "label CSV needs 'sample_id' and 'label' columns");
    std::vector<std::pair<std::string, int>> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() <= label_col) throw Error(ErrorCode::ParseError, "label CSV row " + std::to_string(r + 1) + " is short");
        out.emplace_back(rows[r][0], static_cast<int>(parse_number(rows[r][label_col], path.string())));
    }
    return out;
}

/// Pairwise table laid out with group ids on both margins; lower = observed, upper = permuted, blank diagonal.
inline std::string pairwise_csv(const std::vector<int>& groups, const Matrix& table) {
    std::ostringstream os;
    os << "group";
    for (int g : groups) os << ',' << g;
    os << '\n';
    for (Index i = 0; i < table.rows(); ++i) {
        os << groups[static_cast<std::size_t>(i)];
        for (Index j = 0; j < table.cols(); ++j) {
            os << ',';
            if (i != j) os << format_number(table(i, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace faultdx::io

#endif
