#ifndef FAULTDX_PLOTS_HPP
#define FAULTDX_PLOTS_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "io.hpp"

// SVG charts with CSV companions, rendered from a report JSON document.
// Coordinates are printed with two decimals and nothing time-dependent is
// embedded, so identical reports render to identical bytes.

namespace faultdx::plots {

using json = nlohmann::ordered_json;

/// Type-7 sample quantile (linear interpolation between order statistics) of sorted data.
inline double quantile_sorted(const std::vector<double>& sorted, double prob) {
    require(!sorted.empty(), ErrorCode::InvalidArgument, "quantile of empty data");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

struct BoxStats {
    std::size_t n = 0;
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    double lower_whisker = 0, upper_whisker = 0;
    std::size_t outliers = 0;
};

/// Tukey box: whiskers reach the most extreme points within 1.5·IQR of the box and never end inside it.
inline BoxStats box_stats(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    BoxStats b;
    b.n = v.size();
    b.min = v.front();
    b.max = v.back();
    b.q1 = quantile_sorted(v, 0.25);
    b.median = quantile_sorted(v, 0.5);
    b.q3 = quantile_sorted(v, 0.75);
    const double iqr = b.q3 - b.q1;
    const double lo_fence = b.q1 - 1.5 * iqr, hi_fence = b.q3 + 1.5 * iqr;
    b.lower_whisker = b.q1;
    b.upper_whisker = b.q3;
    for (double x : v) {
        if (x < lo_fence || x > hi_fence) {
            ++b.outliers;
            continue;
        }
        b.lower_whisker = std::min(b.lower_whisker, x);
        b.upper_whisker = std::max(b.upper_whisker, x);
    }
    return b;
}

inline std::string box_csv_header(const std::string& key) {
    return key + ",n,min,q1,median,q3,max,lower_whisker,upper_whisker,outliers\n";
}

inline std::string box_csv_row(const std::string& key, const BoxStats& b) {
    using io::format_number;
    std::ostringstream os;
    os << key << ',' << b.n << ',' << format_number(b.min) << ',' << format_number(b.q1) << ',' << format_number(b.median) << ','
       << format_number(b.q3) << ',' << format_number(b.max) << ',' << format_number(b.lower_whisker) << ','
       << format_number(b.upper_whisker) << ',' << b.outliers << '\n';
    return os.str();
}

inline const char* palette(int i) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    const int m = static_cast<int>(std::size(colors));
    return colors[((i % m) + m) % m];
}

inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

/// Minimal chart canvas with a linear data-to-pixel mapping.
class SvgChart {
public:
    SvgChart(std::string title, std::string xlabel, std::string ylabel, double width = 720, double height = 480)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)), w_(width), h_(height) {}

    void set_range(double x0, double x1, double y0, double y1) {
        auto widen = [](double& a, double& b) {
            if (!(b > a)) {
                a -= 0.5;
                b += 0.5;
            }
            const double pad = 0.05 * (b - a);
            a -= pad;
            b += pad;
        };
        widen(x0, x1);
        widen(y0, y1);
        x0_ = x0, x1_ = x1, y0_ = y0, y1_ = y1;
    }

    double px(double x) const { return kLeft + (x - x0_) / (x1_ - x0_) * (w_ - kLeft - kRight); }
    double py(double y) const { return h_ - kBottom - (y - y0_) / (y1_ - y0_) * (h_ - kTop - kBottom); }

    void point(double x, double y, const std::string& color, double r = 3.0) {
        body_ << "<circle cx=\"" << fmt2(px(x)) << "\" cy=\"" << fmt2(py(y)) << "\" r=\"" << fmt2(r) << "\" fill=\"" << color << "\"/>\n";
    }

    void polyline(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& color) {
        body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) body_ << (i ? " " : "") << fmt2(px(xs[i])) << ',' << fmt2(py(ys[i]));
        body_ << "\"/>\n";
    }

    void line(double xa, double ya, double xb, double yb, const std::string& color) {
        body_ << "<line x1=\"" << fmt2(px(xa)) << "\" y1=\"" << fmt2(py(ya)) << "\" x2=\"" << fmt2(px(xb)) << "\" y2=\"" << fmt2(py(yb))
              << "\" stroke=\"" << color << "\"/>\n";
    }

    void rect(double xa, double ya, double xb, double yb, const std::string& fill) {
        const double left = std::min(px(xa), px(xb)), top = std::min(py(ya), py(yb));
        body_ << "<rect x=\"" << fmt2(left) << "\" y=\"" << fmt2(top) << "\" width=\"" << fmt2(std::abs(px(xb) - px(xa)))
              << "\" height=\"" << fmt2(std::abs(py(yb) - py(ya))) << "\" fill=\"" << fill << "\" fill-opacity=\"0.5\" stroke=\"#333\"/>\n";
    }

    void boxplot(double x, double halfwidth, const BoxStats& b, const std::string& fill) {
        rect(x - halfwidth, b.q1, x + halfwidth, b.q3, fill);
        line(x - halfwidth, b.median, x + halfwidth, b.median, "#000");
        line(x, b.q3, x, b.upper_whisker, "#333");
        line(x, b.q1, x, b.lower_whisker, "#333");
    }

    void x_tick(double x, const std::string& label) {
        body_ << "<text x=\"" << fmt2(px(x)) << "\" y=\"" << fmt2(h_ - kBottom + 14) << "\" font-size=\"9\" text-anchor=\"end\" transform=\"rotate(-45 "
              << fmt2(px(x)) << ' ' << fmt2(h_ - kBottom + 14) << ")\">" << escape_xml(label) << "</text>\n";
    }

    void legend(const std::vector<std::pair<std::string, std::string>>& entries) {
        double y = kTop + 10;
        for (const auto& [label, color] : entries) {
            body_ << "<rect x=\"" << fmt2(w_ - kRight + 10) << "\" y=\"" << fmt2(y - 8) << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>"
                  << "<text x=\"" << fmt2(w_ - kRight + 24) << "\" y=\"" << fmt2(y) << "\" font-size=\"10\">" << escape_xml(label) << "</text>\n";
            y += 14;
        }
    }

    std::string str() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w_) << "\" height=\"" << fmt2(h_) << "\" font-family=\"sans-serif\">\n";
        os << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
        os << "<text x=\"" << fmt2(w_ / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape_xml(title_) << "</text>\n";
        const double l = kLeft, r = w_ - kRight, t = kTop, b = h_ - kBottom;
        os << "<rect x=\"" << fmt2(l) << "\" y=\"" << fmt2(t) << "\" width=\"" << fmt2(r - l) << "\" height=\"" << fmt2(b - t)
           << "\" fill=\"none\" stroke=\"#000\"/>\n";
        for (int i = 0; i <= 4; ++i) {
            const double yv = y0_ + (y1_ - y0_) * i / 4.0;
            os << "<text x=\"" << fmt2(l - 4) << "\" y=\"" << fmt2(py(yv) + 3) << "\" font-size=\"9\" text-anchor=\"end\">" << fmt2(yv) << "</text>\n";
            if (!categorical_x) {
                const double xv = x0_ + (x1_ - x0_) * i / 4.0;
                os << "<text x=\"" << fmt2(px(xv)) << "\" y=\"" << fmt2(b + 12) << "\" font-size=\"9\" text-anchor=\"middle\">" << fmt2(xv) << "</text>\n";
            }
        }
        os << "<text x=\"" << fmt2((l + r) / 2) << "\" y=\"" << fmt2(h_ - 6) << "\" text-anchor=\"middle\" font-size=\"11\">" << escape_xml(xlabel_) << "</text>\n";
        os << "<text x=\"14\" y=\"" << fmt2((t + b) / 2) << "\" text-anchor=\"middle\" font-size=\"11\" transform=\"rotate(-90 14 " << fmt2((t + b) / 2)
           << ")\">" << escape_xml(ylabel_) << "</text>\n";
        os << body_.str() << "</svg>\n";
        return os.str();
    }

    bool categorical_x = false;

private:
    static constexpr double kLeft = 60, kRight = 110, kTop = 30, kBottom = 90;
    std::string title_, xlabel_, ylabel_;
    double w_, h_;
    double x0_ = 0, x1_ = 1, y0_ = 0, y1_ = 1;
    std::ostringstream body_;
};

struct PlotOutcome {
    std::vector<std::string> files;
    /// One entry per plot that could not be drawn because its report section is absent.
    std::vector<Error> errors;
};

namespace detail {

inline double num(const json& v) {
    return v.is_number() ? v.get<double>() : std::numeric_limits<double>::quiet_NaN();
}

inline const json& section(const json& report, const std::string& name) {
    if (!report.contains(name) || report.at(name).is_null()) {
        throw Error(ErrorCode::MissingSection, "report has no '" + name + "' section");
    }
    return report.at(name);
}

inline std::vector<std::pair<std::string, std::string>> cluster_legend(const std::vector<int>& clusters) {
    std::vector<int> u = clusters;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::vector<std::pair<std::string, std::string>> out;
    for (int c : u) out.emplace_back("cluster " + std::to_string(c), palette(c - 1));
    return out;
}

inline std::pair<double, double> extent(const std::vector<double>& v) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double x : v) {
        if (std::isfinite(x)) lo = std::min(lo, x), hi = std::max(hi, x);
    }
    if (!std::isfinite(lo)) return {0.0, 1.0};
    return {lo, hi};
}

struct Writer {
    std::filesystem::path dir;
    PlotOutcome* out;
    void operator()(const std::string& name, const std::string& text) const {
        io::write_text(dir / name, text);
        out->files.push_back(name);
    }
};

inline void feature_boxplots(const json& report, const Writer& write) {
    const auto& f = section(report, "features");
    const auto& names = f.at("names");
    const auto& rows = f.at("normalized");
    std::string csv = box_csv_header("feature");
    SvgChart chart("Normalized feature distributions", "", "normalized value", std::max(720.0, 24.0 * static_cast<double>(names.size()) + 200));
    chart.categorical_x = true;
    std::vector<BoxStats> stats;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t j = 0; j < names.size(); ++j) {
        std::vector<double> col;
        for (const auto& r : rows) col.push_back(num(r.at(j)));
        stats.push_back(box_stats(col));
        lo = std::min(lo, stats.back().min);
        hi = std::max(hi, stats.back().max);
        csv += box_csv_row(names.at(j).get<std::string>(), stats.back());
    }
    chart.set_range(0.0, static_cast<double>(names.size()) + 1.0, lo, hi);
    for (std::size_t j = 0; j < stats.size(); ++j) {
        chart.boxplot(static_cast<double>(j) + 1.0, 0.3, stats[j], palette(0));
        chart.x_tick(static_cast<double>(j) + 1.0, names.at(j).get<std::string>());
    }
    write("feature_boxplot.csv", csv);
    write("feature_boxplot.svg", chart.str());
}

inline void curve(const json& report, const std::string& key, const std::string& stem, const std::string& title, const std::string& ylabel, const Writer& write) {
    const auto& s = section(report, "selection");
    std::string csv = "k," + key + "\n";
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < s.at("k").size(); ++i) {
        const double k = num(s.at("k").at(i));
        const double v = num(s.at(key).at(i));
        csv += std::to_string(static_cast<int>(k)) + "," + io::format_number(v) + "\n";
        if (std::isfinite(v)) {
            xs.push_back(k);
            ys.push_back(v);
        }
    }
    SvgChart chart(title, "number of clusters k", ylabel);
    const auto [klo, khi] = extent(xs);
    const auto [vlo, vhi] = extent(ys);
    chart.set_range(klo, khi, vlo, vhi);
    chart.polyline(xs, ys, palette(0));
    for (std::size_t i = 0; i < xs.size(); ++i) chart.point(xs[i], ys[i], palette(0));
    if (s.contains("recommended_k") && key == "wss") {
        const double rk = num(s.at("recommended_k"));
        chart.line(rk, vlo, rk, vhi, palette(3));
    }
    write(stem + ".csv", csv);
    write(stem + ".svg", chart.str());
}

inline void scree(const json& report, const Writer& write) {
    const auto& o = section(report, "ordination");
    std::string csv = "method,axis,eigenvalue,variance_fraction\n";
    std::vector<double> xs, ys;
    for (const char* kind : {"pca", "pcoa"}) {
        if (!o.contains(kind)) continue;
        const auto& ev = o.at(kind).at("eigenvalues");
        const auto& fr = o.at(kind).at("variance_fraction");
        for (std::size_t i = 0; i < ev.size(); ++i) {
            const double f = i < fr.size() ? num(fr.at(i)) : std::numeric_limits<double>::quiet_NaN();
            csv += std::string(kind) + "," + std::to_string(i + 1) + "," + io::format_number(num(ev.at(i))) + "," + io::format_number(f) + "\n";
            if (std::string(kind) == "pca") {
                xs.push_back(static_cast<double>(i + 1));
                ys.push_back(f);
            }
        }
    }
    SvgChart chart("Scree plot (PCA)", "principal component", "fraction of variance");
    chart.set_range(1.0, std::max(1.0, static_cast<double>(xs.size())), 0.0, std::max(extent(ys).second, 0.0));
    chart.polyline(xs, ys, palette(0));
    for (std::size_t i = 0; i < xs.size(); ++i) chart.point(xs[i], ys[i], palette(0));
    write("scree.csv", csv);
    write("scree.svg", chart.str());
}

inline void scatter(const std::string& title, const std::string& xl, const std::string& yl, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::vector<int>& clusters, const std::string& file, const Writer& write) {
    SvgChart chart(title, xl, yl);
    const auto [x0, x1] = extent(xs);
    const auto [y0, y1] = extent(ys);
    chart.set_range(x0, x1, y0, y1);
    for (std::size_t i = 0; i < xs.size(); ++i) chart.point(xs[i], ys[i], palette(clusters[i] - 1));
    chart.legend(cluster_legend(clusters));
    write(file, chart.str());
}

inline void projections(const json& report, const Writer& write) {
    const auto& p = section(report, "projection");
    std::string csv = "sample_id,cluster,pc1,pc2,pc3\n";
    std::vector<std::vector<double>> pcs(3);
    std::vector<int> clusters;
    for (const auto& row : p.at("points")) {
        clusters.push_back(row.at("cluster").get<int>());
        csv += row.at("sample_id").get<std::string>() + "," + std::to_string(clusters.back());
        for (int a = 0; a < 3; ++a) {
            const std::string key = "pc" + std::to_string(a + 1);
            const double v = row.contains(key) ? num(row.at(key)) : 0.0;
            pcs[static_cast<std::size_t>(a)].push_back(v);
            csv += "," + io::format_number(v);
        }
        csv += "\n";
    }
    write("pca_projection.csv", csv);
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const std::string xa = "PC" + std::to_string(a + 1), yb = "PC" + std::to_string(b + 1);
        scatter("Clusters on " + xa + " vs " + yb, xa, yb, pcs[static_cast<std::size_t>(a)], pcs[static_cast<std::size_t>(b)], clusters,
                "pca_pc" + std::to_string(a + 1) + "_pc" + std::to_string(b + 1) + ".svg", write);
    }
}

inline void timeline(const json& report, const Writer& write) {
    const auto& c = section(report, "clusters");
    std::string csv = "sample_id,timestamp,cluster\n";
    std::vector<double> ts, ys;
    std::vector<int> clusters;
    for (const auto& a : c.at("assignments")) {
        const auto t = a.at("timestamp").get<std::int64_t>();
        const int label = a.at("cluster").get<int>();
        csv += a.at("sample_id").get<std::string>() + "," + std::to_string(t) + "," + std::to_string(label) + "\n";
        ts.push_back(static_cast<double>(t));
        ys.push_back(label);
        clusters.push_back(label);
    }
    const double t0 = ts.empty() ? 0.0 : *std::min_element(ts.begin(), ts.end());
    for (double& t : ts) t = (t - t0) / 3600.0;
    scatter("Cluster label over time", "hours since first acquisition", "cluster", ts, ys, clusters, "cluster_timeline.svg", write);
    write("cluster_timeline.csv", csv);
}

inline void centroid_boxplots(const json& report, const Writer& write) {
    const auto& d = section(report, "permdisp");
    std::map<int, std::vector<double>> by_cluster;
    for (const auto& pt : d.at("points")) by_cluster[pt.at("cluster").get<int>()].push_back(num(pt.at("distance_to_centroid")));
    std::string csv = box_csv_header("cluster");
    SvgChart chart("Distance to cluster centroid", "cluster", "distance to centroid");
    chart.categorical_x = true;
    double hi = 0.0;
    std::vector<std::pair<int, BoxStats>> stats;
    for (const auto& [c, v] : by_cluster) {
        stats.emplace_back(c, box_stats(v));
        hi = std::max(hi, stats.back().second.max);
        csv += box_csv_row(std::to_string(c), stats.back().second);
    }
    chart.set_range(0.0, static_cast<double>(stats.size()) + 1.0, 0.0, hi);
    for (std::size_t i = 0; i < stats.size(); ++i) {
        chart.boxplot(static_cast<double>(i) + 1.0, 0.3, stats[i].second, palette(stats[i].first - 1));
        chart.x_tick(static_cast<double>(i) + 1.0, std::to_string(stats[i].first));
    }
    write("centroid_distance_boxplot.csv", csv);
    write("centroid_distance_boxplot.svg", chart.str());
}

inline void pcoa_scatter(const json& report, const Writer& write) {
    const auto& d = section(report, "permdisp");
    std::string csv = "sample_id,cluster,axis1,axis2\n";
    std::vector<double> xs, ys;
    std::vector<int> clusters;
    for (const auto& pt : d.at("points")) {
        clusters.push_back(pt.at("cluster").get<int>());
        xs.push_back(num(pt.at("pcoa1")));
        ys.push_back(num(pt.at("pcoa2")));
        csv += pt.at("sample_id").get<std::string>() + "," + std::to_string(clusters.back()) + "," + io::format_number(xs.back()) + "," +
               io::format_number(ys.back()) + "\n";
    }
    write("pcoa_scatter.csv", csv);
    scatter("PCoA of sampled clusters", "PCoA 1", "PCoA 2", xs, ys, clusters, "pcoa_scatter.svg", write);
}

}  // namespace detail

/**
 * Render every chart whose report section is present. A missing section yields
 * one MissingSection entry for each chart that needs it; the others are still written.
 */
inline PlotOutcome emit_plots(const json& report, const std::filesystem::path& outdir) {
    PlotOutcome out;
    const detail::Writer write{outdir, &out};
    const std::vector<std::pair<std::string, std::function<void()>>> jobs = {
        {"feature_boxplot", [&] { detail::feature_boxplots(report, write); }},
        {"wss_elbow", [&] { detail::curve(report, "wss", "wss_elbow", "Within-cluster sum of squares", "WSS", write); }},
        {"silhouette", [&] { detail::curve(report, "avg_silhouette", "silhouette", "Average silhouette width", "average silhouette", write); }},
        {"scree", [&] { detail::scree(report, write); }},
        {"pca_projection", [&] { detail::projections(report, write); }},
        {"cluster_timeline", [&] { detail::timeline(report, write); }},
        {"centroid_distance_boxplot", [&] { detail::centroid_boxplots(report, write); }},
        {"pcoa_scatter", [&] { detail::pcoa_scatter(report, write); }},
    };
    for (const auto& [name, job] : jobs) {
        try {
            job();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::MissingSection) throw;
            out.errors.emplace_back(ErrorCode::MissingSection, name + ": " + e.message());
        } catch (const nlohmann::json::exception& e) {
            out.errors.emplace_back(ErrorCode::MissingSection, name + ": malformed section (" + e.what() + ")");
        }
    }
    return out;
}

}  // namespace faultdx::plots

#endif
