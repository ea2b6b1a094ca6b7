#ifndef FAULTDX_PIPELINE_HPP
#define FAULTDX_PIPELINE_HPP

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cluster.hpp"
#include "core.hpp"
#include "datagen.hpp"
#include "distance.hpp"
#include "features.hpp"
#include "hypotest.hpp"
#include "io.hpp"
#include "ordination.hpp"
#include "plots.hpp"
#include "rng.hpp"

/**
 * @file pipeline.hpp
 * @brief End-to-end diagnosis: ingest, features, clustering, hypothesis tests, ordination.
 */

namespace faultdx {

using json = nlohmann::ordered_json;

/**
 * @brief Everything a pipeline run depends on. There is no implicit seed.
 */
struct PipelineConfig {
    std::vector<std::string> inputs;  ///< manifest CSV files
    std::size_t window_len = 0;       ///< 0 keeps whole files
    double sampling_rate_hz = 0.0;    ///< 0 infers the rate from t_s
    std::vector<BandSpec> bands = default_feature_config().bands;
    Taper taper = Taper::none;
    std::string normalization = "zscore";
    std::string metric = "euclidean";
    int k = 0;  ///< 0 selects k from the WSS knee
    int k_max = 15;
    bool gmm_criteria = true;
    int kmeans_restarts = 10;
    int gmm_restarts = 5;
    std::size_t permutations = 999;
    std::optional<std::uint64_t> seed;
    std::size_t sample_per_cluster = 30;
    std::string out_dir;
    unsigned workers = 1;

    void validate() const {
        require(seed.has_value(), ErrorCode::ConfigError, "a seed is required");
        require(permutations >= 1, ErrorCode::ConfigError, "permutations must be at least 1");
        require(k >= 0, ErrorCode::ConfigError, "k must be nonnegative");
        require(k > 0 || k_max >= 3, ErrorCode::ConfigError, "k_max must be at least 3 when k is selected automatically");
        require(sample_per_cluster >= 2, ErrorCode::ConfigError, "sample_per_cluster must be at least 2");
        require(kmeans_restarts >= 1 && gmm_restarts >= 1, ErrorCode::ConfigError, "restart counts must be positive");
        require(normalization == "zscore" || normalization == "minmax" || normalization == "none", ErrorCode::ConfigError,
                "normalization must be zscore, minmax or none");
        (void)parse_metric(metric);
        for (const auto& b : bands) {
            require(b.center_hz > 0.0 && b.halfwidth_hz > 0.0, ErrorCode::ConfigError, "band center and halfwidth must be positive");
        }
    }

    json to_json() const {
        json j;
        j["inputs"] = inputs;
        j["window_len"] = window_len;
        j["sampling_rate_hz"] = sampling_rate_hz;
        j["bands"] = json::array();
        for (const auto& b : bands) j["bands"].push_back({{"center_hz", b.center_hz}, {"halfwidth_hz", b.halfwidth_hz}});
        j["taper"] = taper == Taper::hann ? "hann" : "none";
        j["normalization"] = normalization;
        j["metric"] = metric;
        j["k"] = k;
        j["k_max"] = k_max;
        j["gmm_criteria"] = gmm_criteria;
        j["kmeans_restarts"] = kmeans_restarts;
        j["gmm_restarts"] = gmm_restarts;
        j["permutations"] = permutations;
        j["seed"] = seed ? json(*seed) : json(nullptr);
        j["sample_per_cluster"] = sample_per_cluster;
        return j;
    }

    /// Fields absent from `j` keep their current values.
    void merge_json(const json& j) {
        try {
            if (!j.is_object()) throw Error(ErrorCode::ConfigError, "config must be a JSON object");
            static const std::vector<std::string> known = {"inputs", "window_len", "sampling_rate_hz", "bands", "taper", "normalization", "metric", "k",
                                                           "k_max", "gmm_criteria", "kmeans_restarts", "gmm_restarts", "permutations", "seed",
                                                           "sample_per_cluster", "out", "workers"};
            for (const auto& [key, _] : j.items()) {
                require(std::find(known.begin(), known.end(), key) != known.end(), ErrorCode::ConfigError, "unknown config key '" + key + "'");
            }
            if (j.contains("inputs")) inputs = j.at("inputs").get<std::vector<std::string>>();
            if (j.contains("window_len")) window_len = j.at("window_len").get<std::size_t>();
            if (j.contains("sampling_rate_hz")) sampling_rate_hz = j.at("sampling_rate_hz").get<double>();
            if (j.contains("bands")) {
                bands.clear();
                for (const auto& b : j.at("bands")) bands.push_back({b.at("center_hz").get<double>(), b.at("halfwidth_hz").get<double>()});
            }
            if (j.contains("taper")) {
                const auto t = j.at("taper").get<std::string>();
                require(t == "none" || t == "hann", ErrorCode::ConfigError, "taper must be none or hann");
                taper = t == "hann" ? Taper::hann : Taper::none;
            }
            if (j.contains("normalization")) normalization = j.at("normalization").get<std::string>();
            if (j.contains("metric")) metric = j.at("metric").get<std::string>();
            if (j.contains("k")) k = j.at("k").get<int>();
            if (j.contains("k_max")) k_max = j.at("k_max").get<int>();
            if (j.contains("gmm_criteria")) gmm_criteria = j.at("gmm_criteria").get<bool>();
            if (j.contains("kmeans_restarts")) kmeans_restarts = j.at("kmeans_restarts").get<int>();
            if (j.contains("gmm_restarts")) gmm_restarts = j.at("gmm_restarts").get<int>();
            if (j.contains("permutations")) permutations = j.at("permutations").get<std::size_t>();
            if (j.contains("seed") && !j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
            if (j.contains("sample_per_cluster")) sample_per_cluster = j.at("sample_per_cluster").get<std::size_t>();
            if (j.contains("out")) out_dir = j.at("out").get<std::string>();
            if (j.contains("workers")) workers = j.at("workers").get<unsigned>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ConfigError, std::string("invalid config: ") + e.what());
        }
    }
};

inline PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open config '" + path.string() + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ConfigError, "config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    PipelineConfig cfg;
    cfg.merge_json(j);
    // Relative inputs are resolved against the config file.
    for (auto& in_path : cfg.inputs) {
        std::filesystem::path p(in_path);
        if (p.is_relative()) in_path = (path.parent_path() / p).string();
    }
    return cfg;
}

struct StageError {
    std::string stage;
    ErrorCode code = ErrorCode::InvalidArgument;
    std::string message;
};

/// Common JSON record for a hypothesis test.
inline json test_record(const std::string& name, double statistic, json df, std::size_t permutations, std::size_t exceedances, double p_value,
                        std::optional<double> parametric_p, std::uint64_t seed, const std::vector<std::string>& warnings) {
    json j;
    j["test"] = name;
    j["statistic"] = statistic;
    j["df"] = std::move(df);
    j["permutations"] = permutations;
    j["exceedances"] = exceedances;
    j["p_value"] = p_value;
    if (parametric_p) j["parametric_p"] = *parametric_p;
    j["seed"] = seed;
    j["warnings"] = warnings;
    return j;
}

inline json to_json(const ClusterSelection& sel) {
    auto opt = [](const std::vector<std::optional<double>>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(x ? json(*x) : json(nullptr));
        return a;
    };
    json j;
    j["k"] = sel.k_values;
    j["wss"] = sel.wss;
    j["avg_silhouette"] = opt(sel.avg_silhouette);
    j["bic"] = opt(sel.bic);
    j["aic"] = opt(sel.aic);
    j["method"] = sel.method;
    j["recommended_k"] = sel.recommended_k;
    j["low_confidence"] = sel.low_confidence;
    return j;
}

inline json to_json(const PermanovaResult& r, const std::vector<std::string>& warnings = {}) {
    json j = test_record("permanova", r.pseudo_f, json::array({r.df_among, r.df_within}), r.test.permutations, r.test.exceedances, r.test.p_value,
                         std::nullopt, r.test.seed, warnings);
    j["ss_total"] = r.ss_total;
    j["ss_among"] = r.ss_among;
    j["ss_within"] = r.ss_within;
    return j;
}

/// Pairwise table as nested arrays with null on the diagonal.
inline json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(std::isfinite(m(i, j)) ? json(m(i, j)) : json(nullptr));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Cluster numbers in reports are 1-based.
inline json to_json(const DispersionResult& r) {
    json j = test_record("permdisp", r.anova_f, json::array({r.df_between, r.df_within}), r.test.permutations, r.test.exceedances, r.test.p_value,
                         r.test.parametric_p, r.test.seed, r.warnings);
    j["ss_between"] = r.ss_between;
    j["ss_within"] = r.ss_within;
    json groups = json::array();
    for (int g : r.groups) groups.push_back(g + 1);
    j["groups"] = groups;
    j["group_mean_distances"] = r.group_mean_distances;
    j["clamped_count"] = r.clamped_count;
    j["pairwise"] = {{"layout", "lower triangle: observed Welch p; upper triangle: permutation p"}, {"groups", groups}, {"p_values", matrix_json(r.pairwise)}};
    return j;
}

/**
 * @brief Outcome of a pipeline run. Sections that were not reached stay empty;
 * `to_json` omits them.
 */
struct DiagnosisReport {
    PipelineConfig config;
    std::optional<FeatureMatrix> features;  ///< normalized
    std::vector<std::int64_t> timestamps;
    std::vector<std::string> constant_columns;
    std::optional<ClusterSelection> selection;
    int chosen_k = 0;
    Labels labels;  ///< 0-based GMM labels per sample
    Matrix responsibilities;
    std::optional<GmmModel> gmm;
    std::vector<Index> sampled;  ///< rows used by the hypothesis tests
    std::optional<json> normality;
    std::optional<json> bartlett;
    std::optional<PermanovaResult> permanova;
    std::optional<DispersionResult> dispersion;
    Matrix dispersion_pcoa;  ///< first two PCoA axes of the sampled rows
    std::optional<OrdinationResult> pca;
    std::optional<OrdinationResult> pcoa;
    std::vector<std::string> warnings;
    std::vector<StageError> errors;

    bool ok() const { return errors.empty(); }

    json to_json() const;
};

inline json DiagnosisReport::to_json() const {
    json j;
    j["tool"] = "faultdx";
    j["config"] = config.to_json();
    if (features) {
        const auto& fm = *features;
        json f;
        f["n_samples"] = fm.rows();
        f["names"] = fm.feature_names();
        f["sample_ids"] = fm.sample_ids();
        f["normalization"] = config.normalization;
        f["constant_columns"] = constant_columns;
        json rows = json::array();
        for (Index i = 0; i < fm.rows(); ++i) {
            json row = json::array();
            for (Index c = 0; c < fm.cols(); ++c) row.push_back(fm.values()(i, c));
            rows.push_back(std::move(row));
        }
        f["normalized"] = std::move(rows);
        j["features"] = std::move(f);
    }
    if (selection) j["selection"] = faultdx::to_json(*selection);
    if (chosen_k > 0) j["chosen_k"] = chosen_k;
    if (gmm && features) {
        json c;
        c["k"] = gmm->k;
        std::vector<Index> sizes(static_cast<std::size_t>(gmm->k), 0);
        for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
        c["sizes"] = sizes;
        c["gmm"] = {{"log_likelihood", gmm->log_likelihood}, {"bic", gmm->bic}, {"aic", gmm->aic}, {"iterations", gmm->n_iter},
                    {"converged", gmm->converged}, {"weights", std::vector<double>(gmm->weights.data(), gmm->weights.data() + gmm->weights.size())}};
        json a = json::array();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            a.push_back({{"sample_id", features->sample_ids()[i]}, {"timestamp", timestamps[i]}, {"cluster", labels[i] + 1}});
        }
        c["assignments"] = std::move(a);
        j["clusters"] = std::move(c);
    }
    if (!sampled.empty() && features) {
        json s;
        s["per_cluster"] = config.sample_per_cluster;
        s["seed"] = config.seed.value_or(0);
        json ids = json::array();
        for (Index r : sampled) ids.push_back(features->sample_ids()[static_cast<std::size_t>(r)]);
        s["sample_ids"] = std::move(ids);
        j["sampling"] = std::move(s);
    }
    if (normality) j["normality"] = *normality;
    if (bartlett) j["bartlett"] = *bartlett;
    if (permanova) j["permanova"] = faultdx::to_json(*permanova);
    if (dispersion && features) {
        json d = faultdx::to_json(*dispersion);
        json pts = json::array();
        for (std::size_t i = 0; i < sampled.size(); ++i) {
            const auto row = sampled[i];
            json p = {{"sample_id", features->sample_ids()[static_cast<std::size_t>(row)]},
                      {"cluster", labels[static_cast<std::size_t>(row)] + 1},
                      {"distance_to_centroid", dispersion->centroid_distances[i]}};
            p["pcoa1"] = dispersion_pcoa.cols() > 0 ? dispersion_pcoa(static_cast<Index>(i), 0) : 0.0;
            p["pcoa2"] = dispersion_pcoa.cols() > 1 ? dispersion_pcoa(static_cast<Index>(i), 1) : 0.0;
            pts.push_back(std::move(p));
        }
        d["points"] = std::move(pts);
        j["permdisp"] = std::move(d);
    }
    if (pca || pcoa) {
        json o;
        if (pca) o["pca"] = {{"eigenvalues", pca->eigenvalues}, {"variance_fraction", pca->variance_fraction}};
        if (pcoa) {
            json fr = json::array();
            for (const auto& s : scree(*pcoa)) fr.push_back(s.fraction ? json(*s.fraction) : json(nullptr));
            o["pcoa"] = {{"eigenvalues", pcoa->eigenvalues}, {"variance_fraction", fr}};
        }
        j["ordination"] = std::move(o);
    }
    if (pca && features && !labels.empty()) {
        json pts = json::array();
        for (Index i = 0; i < pca->coords.rows(); ++i) {
            json p = {{"sample_id", features->sample_ids()[static_cast<std::size_t>(i)]}, {"cluster", labels[static_cast<std::size_t>(i)] + 1}};
            for (Index a = 0; a < std::min<Index>(3, pca->coords.cols()); ++a) p["pc" + std::to_string(a + 1)] = pca->coords(i, a);
            pts.push_back(std::move(p));
        }
        j["projection"] = {{"points", std::move(pts)}};
    }
    j["warnings"] = warnings;
    json errs = json::array();
    for (const auto& e : errors) errs.push_back({{"stage", e.stage}, {"code", std::string(to_string(e.code))}, {"message", e.message}});
    j["errors"] = std::move(errs);
    return j;
}

namespace detail {

inline constexpr std::uint64_t kSampleStream = 0x73616d706c65ULL;

/// Up to `per_cluster` rows of each cluster, drawn by a seeded shuffle keyed on the cluster.
inline std::vector<Index> sample_per_cluster(const Labels& labels, int k, std::size_t per_cluster, std::uint64_t seed, std::vector<std::string>& warnings) {
    std::vector<Index> out;
    for (int c = 0; c < k; ++c) {
        std::vector<Index> members;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == c) members.push_back(static_cast<Index>(i));
        }
        if (members.size() <= per_cluster) {
            if (members.size() < per_cluster) {
                warnings.push_back("SampleFallback: cluster " + std::to_string(c + 1) + " has " + std::to_string(members.size()) +
                                   " members, fewer than sample_per_cluster=" + std::to_string(per_cluster) + "; using the whole cluster");
            }
        } else {
            CounterRng rng(seed, {kSampleStream, static_cast<std::uint64_t>(c)});
            fisher_yates(members, rng);
            members.resize(per_cluster);
            std::sort(members.begin(), members.end());
        }
        out.insert(out.end(), members.begin(), members.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Indices of the `m` columns with the largest sample variance; ties keep column order.
inline std::vector<Index> top_variance_columns(const Matrix& x, std::size_t m) {
    std::vector<std::pair<double, Index>> v;
    for (Index j = 0; j < x.cols(); ++j) {
        const double mean = x.col(j).mean();
        v.emplace_back((x.col(j).array() - mean).square().sum(), j);
    }
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Index> out;
    for (std::size_t i = 0; i < std::min(m, v.size()); ++i) out.push_back(v[i].second);
    return out;
}

}  // namespace detail

/**
 * Run every stage on in-memory observations. Failures in the data stages stop the
 * run; a failing test or ordination stage is recorded and the rest continue.
 */
inline DiagnosisReport diagnose(const std::vector<Observation>& observations, const PipelineConfig& cfg) {
    DiagnosisReport rep;
    rep.config = cfg;
    auto fail = [&](const std::string& stage, const Error& e) { rep.errors.push_back({stage, e.code(), e.what()}); };
    std::string stage = "config";
    try {
        cfg.validate();
        const std::uint64_t seed = *cfg.seed;

        stage = "features";
        FeatureConfig fc;
        fc.bands = cfg.bands;
        fc.taper = cfg.taper;
        fc.workers = cfg.workers;
        auto fx = build_feature_matrix(observations, fc);
        rep.warnings.insert(rep.warnings.end(), fx.warnings.begin(), fx.warnings.end());
        rep.timestamps = fx.timestamps;

        stage = "normalize";
        if (cfg.normalization == "none") {
            rep.features = fx.matrix;
        } else {
            auto nf = normalize_features(fx.matrix, cfg.normalization == "minmax" ? NormalizeMethod::minmax : NormalizeMethod::zscore);
            rep.constant_columns = nf.constant_columns;
            for (const auto& c : nf.constant_columns) rep.warnings.push_back("ZeroVariance: feature '" + c + "' is constant; normalized to 0");
            rep.features = std::move(nf.matrix);
        }
        const FeatureMatrix& fm = *rep.features;

        stage = "select_k";
        if (cfg.k_max >= 3) {
            SelectionOptions so;
            so.k_max = std::min<int>(cfg.k_max, static_cast<int>(fm.rows()));
            so.seed = seed;
            so.restarts = cfg.kmeans_restarts;
            so.with_gmm_criteria = cfg.gmm_criteria;
            so.gmm.restarts = cfg.gmm_restarts;
            so.gmm.kmeans_restarts = cfg.kmeans_restarts;
            so.workers = cfg.workers;
            rep.selection = select_k(fm, so);
            rep.warnings.insert(rep.warnings.end(), rep.selection->warnings.begin(), rep.selection->warnings.end());
        }
        rep.chosen_k = cfg.k > 0 ? cfg.k : rep.selection->recommended_k;

        stage = "cluster";
        GmmOptions go;
        go.seed = seed;
        go.restarts = cfg.gmm_restarts;
        go.kmeans_restarts = cfg.kmeans_restarts;
        go.workers = cfg.workers;
        rep.gmm = gmm_fit(fm, rep.chosen_k, go);
        auto pred = gmm_predict(*rep.gmm, fm);
        rep.labels = pred.labels;
        rep.responsibilities = pred.responsibilities;

        stage = "sample";
        rep.sampled = detail::sample_per_cluster(rep.labels, rep.chosen_k, cfg.sample_per_cluster, seed, rep.warnings);
        {
            std::vector<Index> kept;
            for (int c = 0; c < rep.chosen_k; ++c) {
                std::size_t size = 0;
                for (Index r : rep.sampled) size += rep.labels[static_cast<std::size_t>(r)] == c ? 1 : 0;
                if (size == 1) rep.warnings.push_back("SmallCluster: cluster " + std::to_string(c + 1) + " has a single member and is left out of the tests");
            }
            for (Index r : rep.sampled) {
                const int c = rep.labels[static_cast<std::size_t>(r)];
                const auto size = std::count_if(rep.sampled.begin(), rep.sampled.end(), [&](Index s) { return rep.labels[static_cast<std::size_t>(s)] == c; });
                if (size >= 2) kept.push_back(r);
            }
            rep.sampled = std::move(kept);
        }
        const FeatureMatrix sub = fm.select_rows(rep.sampled);
        Labels sub_labels;
        for (Index r : rep.sampled) sub_labels.push_back(rep.labels[static_cast<std::size_t>(r)]);
        const GroupLabels groups(sub_labels);
        PermutationOptions po;
        po.permutations = cfg.permutations;
        po.seed = seed;
        po.workers = cfg.workers;

        auto run_stage = [&](const std::string& name, auto&& body) {
            try {
                body();
            } catch (const Error& e) {
                fail(name, e);
            }
        };

        std::optional<OrdinationResult> sub_pca;
        run_stage("normality", [&] {
            sub_pca = pca(sub, 1);
            std::vector<double> pc1(sub_pca->coords.col(0).data(), sub_pca->coords.col(0).data() + sub_pca->coords.rows());
            const auto sw = shapiro_wilk(pc1);
            json rec = test_record("shapiro_wilk", sw.w, nullptr, 0, 0, sw.p_value, std::nullopt, seed, {});
            rec["input"] = "pc1_scores";
            rec["n"] = sw.n;
            json per = json::array();
            for (Index col : detail::top_variance_columns(sub.values(), 5)) {
                const auto& name = sub.feature_names()[static_cast<std::size_t>(col)];
                try {
                    std::vector<double> v(sub.values().col(col).data(), sub.values().col(col).data() + sub.rows());
                    const auto r = shapiro_wilk(v);
                    per.push_back({{"feature", name}, {"w", r.w}, {"p_value", r.p_value}});
                } catch (const Error& e) {
                    const std::string w = "normality: feature '" + name + "' skipped (" + e.what() + ")";
                    rep.warnings.push_back(w);
                    rec["warnings"].push_back(w);
                }
            }
            rec["per_feature"] = std::move(per);
            rep.normality = std::move(rec);
        });

        run_stage("bartlett", [&] {
            if (!sub_pca) sub_pca = pca(sub, 1);
            std::vector<std::vector<double>> per_group(groups.group_count());
            for (Index i = 0; i < sub.rows(); ++i) {
                per_group[static_cast<std::size_t>(groups.group_index()[static_cast<std::size_t>(i)])].push_back(sub_pca->coords(i, 0));
            }
            const auto b = bartlett_test(per_group);
            json rec = test_record("bartlett", b.k_squared, b.df, 0, 0, b.p_value, std::nullopt, seed, {});
            rec["input"] = "pc1_scores";
            rep.bartlett = std::move(rec);
        });

        stage = "distance";
        const auto dm = distance_matrix(sub, parse_metric(cfg.metric));

        run_stage("permanova", [&] { rep.permanova = permanova(dm, groups, po); });
        run_stage("permdisp", [&] {
            auto d = permdisp(dm, groups, po);
            rep.warnings.insert(rep.warnings.end(), d.warnings.begin(), d.warnings.end());
            rep.dispersion = std::move(d);
        });
        run_stage("ordination", [&] {
            rep.pca = pca(fm, static_cast<int>(std::min<Index>(3, std::min(fm.rows() - 1, fm.cols()))));
            rep.pcoa = pcoa(dm);
            rep.dispersion_pcoa = rep.pcoa->coords.leftCols(std::min<Index>(2, rep.pcoa->coords.cols()));
        });
    } catch (const Error& e) {
        fail(stage, e);
    }
    return rep;
}

/// Read the configured manifests and run `diagnose`.
inline DiagnosisReport run_pipeline(const PipelineConfig& cfg) {
    std::vector<Observation> obs;
    try {
        require(!cfg.inputs.empty(), ErrorCode::ConfigError, "no input manifests configured");
        for (const auto& path : cfg.inputs) {
            auto part = io::read_observations(path, cfg.sampling_rate_hz, cfg.window_len);
            obs.insert(obs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    } catch (const Error& e) {
        DiagnosisReport rep;
        rep.config = cfg;
        rep.errors.push_back({"ingest", e.code(), e.what()});
        return rep;
    }
    return diagnose(obs, cfg);
}

/// Report JSON, cluster assignment and selection tables, pairwise table, and plots under `dir`.
inline plots::PlotOutcome write_outputs(const DiagnosisReport& rep, const std::filesystem::path& dir) {
    const json j = rep.to_json();
    io::write_text(dir / "report.json", j.dump(2) + "\n");
    if (rep.features) io::write_feature_csv(dir / "features_normalized.csv", *rep.features);
    if (rep.selection) io::write_text(dir / "selection.csv", io::selection_csv(*rep.selection));
    if (rep.gmm && rep.features) {
        io::write_text(dir / "clusters.csv", io::assignments_csv(rep.features->sample_ids(), rep.timestamps, rep.labels, rep.responsibilities));
    }
    if (rep.dispersion) {
        std::vector<int> groups;
        for (int g : rep.dispersion->groups) groups.push_back(g + 1);
        io::write_text(dir / "pairwise_dispersion.csv", io::pairwise_csv(groups, rep.dispersion->pairwise));
    }
    return plots::emit_plots(j, dir / "plots");
}

}  // namespace faultdx

#endif
