// faultdx command-line front end.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <faultdx/pipeline.hpp>

namespace fs = std::filesystem;
using namespace faultdx;

namespace {

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> permutations;
    std::optional<std::string> metric;
    std::string config;
    std::string out;
};

PipelineConfig base_config(const Globals& g) {
    PipelineConfig cfg = g.config.empty() ? PipelineConfig{} : load_config(g.config);
    if (g.seed) cfg.seed = *g.seed;
    if (g.permutations) cfg.permutations = *g.permutations;
    if (g.metric) cfg.metric = *g.metric;
    if (!g.out.empty()) cfg.out_dir = g.out;
    return cfg;
}

std::uint64_t need_seed(const PipelineConfig& cfg) {
    require(cfg.seed.has_value(), ErrorCode::ConfigError, "--seed is required");
    return *cfg.seed;
}

/// Writes to `path`, or to stdout when no path was given.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        io::write_text(path, text);
    }
}

std::vector<BandSpec> parse_bands(const std::vector<std::string>& specs) {
    std::vector<BandSpec> out;
    for (const auto& s : specs) {
        const auto colon = s.find(':');
        require(colon != std::string::npos, ErrorCode::ConfigError, "band '" + s + "' must look like center:halfwidth");
        out.push_back({io::parse_number(s.substr(0, colon), "--band"), io::parse_number(s.substr(colon + 1), "--band")});
    }
    return out;
}

/// Rows of `ids` mapped to the labels in a `sample_id,label` file.
Labels labels_for(const std::vector<std::string>& ids, const std::string& path) {
    std::map<std::string, int> lookup;
    for (const auto& [id, label] : io::read_labels_csv(path)) lookup[id] = label;
    Labels out;
    for (const auto& id : ids) {
        const auto it = lookup.find(id);
        require(it != lookup.end(), ErrorCode::UnknownLabel, "no label for sample '" + id + "'");
        out.push_back(it->second);
    }
    return out;
}

std::vector<double> column_or_pc1(const FeatureMatrix& fm, const std::string& column) {
    if (column.empty() || column == "pc1") {
        const auto ord = pca(fm, 1);
        return {ord.coords.col(0).data(), ord.coords.col(0).data() + ord.coords.rows()};
    }
    const auto& names = fm.feature_names();
    const auto it = std::find(names.begin(), names.end(), column);
    require(it != names.end(), ErrorCode::ConfigError, "unknown column '" + column + "'");
    const auto j = static_cast<Index>(it - names.begin());
    return {fm.values().col(j).data(), fm.values().col(j).data() + fm.rows()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"faultdx: vibration feature clustering and permutation-based fault diagnosis"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "RNG seed (required by every stochastic step)");
    app.add_option("--permutations", g.permutations, "number of label permutations B")->check(CLI::PositiveNumber);
    app.add_option("--metric", g.metric, "dissimilarity: euclidean, manhattan or braycurtis");
    app.add_option("--config", g.config, "pipeline config JSON");
    app.add_option("--out", g.out, "output file or directory");

    // datagen
    auto* datagen = app.add_subcommand("datagen", "write synthetic six-state waveforms and a manifest");
    int per_state = datagen_defaults::kWindowsPerState;
    int window_len = datagen_defaults::kWindowLength;
    double fs_hz = datagen_defaults::kSamplingRateHz;
    double base_hz = datagen_defaults::kBaseFrequencyHz;
    bool contrast = false;
    datagen->add_option("--windows-per-state", per_state)->check(CLI::PositiveNumber);
    datagen->add_option("--window-len", window_len);
    datagen->add_option("--fs", fs_hz);
    datagen->add_option("--base-freq", base_hz);
    datagen->add_flag("--contrast", contrast, "widen the imbalance state's amplitude jitter");

    // features
    auto* features = app.add_subcommand("features", "extract the feature matrix from a manifest");
    std::string manifest, normalize = "none", taper = "none";
    std::vector<std::string> bands;
    std::size_t feat_window = 0;
    double feat_fs = 0.0;
    unsigned workers = 1;
    features->add_option("--manifest", manifest)->required();
    features->add_option("--normalize", normalize)->check(CLI::IsMember({"none", "zscore", "minmax"}));
    features->add_option("--taper", taper)->check(CLI::IsMember({"none", "hann"}));
    features->add_option("--band", bands, "center_hz:halfwidth_hz (repeatable)");
    features->add_option("--window-len", feat_window);
    features->add_option("--fs", feat_fs, "sampling rate; inferred from t_s when omitted");
    features->add_option("--workers", workers);

    // select-k
    auto* selectk = app.add_subcommand("select-k", "WSS, silhouette and GMM criteria over k = 1..k_max");
    std::string feature_csv;
    int k_max = 15, restarts = 10;
    bool no_gmm = false;
    selectk->add_option("--features", feature_csv)->required();
    selectk->add_option("--k-max", k_max);
    selectk->add_option("--restarts", restarts);
    selectk->add_flag("--no-gmm", no_gmm, "skip the BIC/AIC columns");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "fit a Gaussian mixture and write assignments");
    int k = 0;
    std::string cluster_manifest;
    cluster->add_option("--features", feature_csv)->required();
    cluster->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    cluster->add_option("--manifest", cluster_manifest, "manifest supplying timestamps");

    // distance
    auto* distance = app.add_subcommand("distance", "pairwise dissimilarity matrix");
    distance->add_option("--features", feature_csv)->required();

    // ordinate
    auto* ordinate = app.add_subcommand("ordinate", "PCA of features or PCoA of a distance matrix");
    std::string method, distance_csv;
    int components = 3;
    ordinate->add_option("method", method)->required()->check(CLI::IsMember({"pca", "pcoa"}));
    ordinate->add_option("--features", feature_csv);
    ordinate->add_option("--distances", distance_csv);
    ordinate->add_option("--components", components);

    // test
    auto* test = app.add_subcommand("test", "hypothesis tests");
    std::string test_name, labels_csv, column;
    test->add_option("name", test_name)->required()->check(CLI::IsMember({"permanova", "permdisp", "normality", "bartlett"}));
    test->add_option("--features", feature_csv);
    test->add_option("--distances", distance_csv);
    test->add_option("--labels", labels_csv, "CSV with sample_id and label columns");
    test->add_option("--column", column, "feature column for normality/bartlett (default: PC1 scores)");

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "run every stage and write the report, tables and plots");
    std::vector<std::string> manifests;
    int pk = 0;
    std::optional<int> pk_max;
    pipeline->add_option("--manifest", manifests, "input manifest (repeatable)");
    pipeline->add_option("--k", pk, "fixed cluster count (default: WSS knee)");
    pipeline->add_option("--k-max", pk_max);

    // plot
    auto* plot = app.add_subcommand("plot", "render plots from a report JSON");
    std::string report_path;
    plot->add_option("--report", report_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        PipelineConfig cfg = base_config(g);

        if (*datagen) {
            const auto seed = need_seed(cfg);
            require(!cfg.out_dir.empty(), ErrorCode::ConfigError, "--out directory is required");
            auto states = default_states(per_state, contrast);
            for (auto& [spec, count] : states) spec.base_freq_hz = base_hz;
            const auto ds = synth_dataset(states, fs_hz, window_len, seed);
            const fs::path dir = cfg.out_dir;
            std::vector<io::ManifestEntry> entries;
            std::string labels = "sample_id,label,state\n";
            for (std::size_t i = 0; i < ds.observations.size(); ++i) {
                const auto& obs = ds.observations[i];
                const fs::path rel = fs::path("waves") / (obs.sample_id + ".csv");
                io::write_waveform_csv(dir / rel, obs);
                entries.push_back({obs.sample_id, obs.timestamp, rel});
                labels += obs.sample_id + "," + std::to_string(ds.labels[i] + 1) + "," + ds.state_names[static_cast<std::size_t>(ds.labels[i])] + "\n";
            }
            io::write_manifest(dir / "manifest.csv", entries);
            io::write_text(dir / "labels.csv", labels);
            std::cout << "wrote " << entries.size() << " windows to " << dir.string() << "\n";
        } else if (*features) {
            FeatureConfig fc;
            fc.bands = bands.empty() ? cfg.bands : parse_bands(bands);
            fc.taper = taper == "hann" ? Taper::hann : cfg.taper;
            fc.workers = workers;
            const auto obs = io::read_observations(manifest, feat_fs > 0 ? feat_fs : cfg.sampling_rate_hz, feat_window > 0 ? feat_window : cfg.window_len);
            auto fx = build_feature_matrix(obs, fc);
            for (const auto& w : fx.warnings) std::cerr << "warning: " << w << "\n";
            FeatureMatrix fm = fx.matrix;
            if (normalize != "none") {
                auto nf = normalize_features(fm, normalize == "minmax" ? NormalizeMethod::minmax : NormalizeMethod::zscore);
                for (const auto& c : nf.constant_columns) std::cerr << "warning: feature '" << c << "' is constant; normalized to 0\n";
                fm = std::move(nf.matrix);
            }
            emit(cfg.out_dir, io::feature_csv(fm));
        } else if (*selectk) {
            SelectionOptions so;
            so.seed = need_seed(cfg);
            so.k_max = k_max;
            so.restarts = restarts;
            so.with_gmm_criteria = !no_gmm;
            const auto sel = select_k(io::read_feature_csv(feature_csv), so);
            for (const auto& w : sel.warnings) std::cerr << "warning: " << w << "\n";
            emit(cfg.out_dir, io::selection_csv(sel));
            std::cerr << "recommended k = " << sel.recommended_k << (sel.low_confidence ? " (low confidence)" : "") << "\n";
        } else if (*cluster) {
            const auto fm = io::read_feature_csv(feature_csv);
            GmmOptions go;
            go.seed = need_seed(cfg);
            const auto model = gmm_fit(fm, k, go);
            const auto pred = gmm_predict(model, fm);
            std::vector<std::int64_t> ts;
            if (!cluster_manifest.empty()) {
                std::map<std::string, std::int64_t> lookup;
                for (const auto& e : io::read_manifest(cluster_manifest)) lookup[e.sample_id] = e.timestamp;
                for (const auto& id : fm.sample_ids()) {
                    const auto it = lookup.find(id);
                    require(it != lookup.end(), ErrorCode::UnknownLabel, "sample '" + id + "' is not in the manifest");
                    ts.push_back(it->second);
                }
            }
            emit(cfg.out_dir, io::assignments_csv(fm.sample_ids(), ts, pred.labels, pred.responsibilities));
            std::cerr << "log-likelihood " << model.log_likelihood << ", BIC " << model.bic << ", " << model.n_iter << " EM iterations\n";
        } else if (*distance) {
            const auto fm = io::read_feature_csv(feature_csv);
            const auto dm = distance_matrix(fm, parse_metric(cfg.metric));
            if (cfg.out_dir.empty()) {
                std::cout << "use --out to choose the distance CSV path\n";
                return 2;
            }
            io::write_distance_csv(cfg.out_dir, dm);
        } else if (*ordinate) {
            OrdinationResult ord;
            if (method == "pca") {
                require(!feature_csv.empty(), ErrorCode::ConfigError, "pca needs --features");
                ord = pca(io::read_feature_csv(feature_csv), components);
            } else if (!distance_csv.empty()) {
                ord = pcoa(io::read_distance_csv(distance_csv));
            } else {
                require(!feature_csv.empty(), ErrorCode::ConfigError, "pcoa needs --distances or --features");
                ord = pcoa(distance_matrix(io::read_feature_csv(feature_csv), parse_metric(cfg.metric)));
            }
            const Matrix coords = ord.coords.leftCols(std::min<Index>(components, ord.coords.cols()));
            emit(cfg.out_dir, io::coordinates_csv(ord.sample_ids, coords));
            json meta;
            meta["method"] = method;
            meta["eigenvalues"] = ord.eigenvalues;
            meta["variance_fraction"] = ord.variance_fraction;
            meta["imaginary_axes"] = ord.imaginary_coords.cols();
            if (!cfg.out_dir.empty()) {
                io::write_text(fs::path(cfg.out_dir).replace_extension(".json"), meta.dump(2) + "\n");
            } else {
                std::cerr << meta.dump(2) << "\n";
            }
        } else if (*test) {
            PermutationOptions po;
            po.permutations = cfg.permutations;
            po.seed = need_seed(cfg);
            json rec;
            if (test_name == "permanova" || test_name == "permdisp") {
                require(!labels_csv.empty(), ErrorCode::ConfigError, "--labels is required");
                std::optional<DistanceMatrix> dm;
                if (!distance_csv.empty()) {
                    dm = io::read_distance_csv(distance_csv, cfg.metric);
                } else {
                    require(!feature_csv.empty(), ErrorCode::ConfigError, "--features or --distances is required");
                    dm = distance_matrix(io::read_feature_csv(feature_csv), parse_metric(cfg.metric));
                }
                const GroupLabels groups(labels_for(dm->sample_ids(), labels_csv));
                if (test_name == "permanova") {
                    rec = to_json(permanova(*dm, groups, po));
                } else {
                    const auto d = permdisp(*dm, groups, po);
                    rec = to_json(d);
                    for (const auto& w : d.warnings) std::cerr << "warning: " << w << "\n";
                    if (!cfg.out_dir.empty()) {
                        fs::path pw = cfg.out_dir;
                        pw.replace_filename(pw.stem().string() + "_pairwise.csv");
                        io::write_text(pw, io::pairwise_csv(d.groups, d.pairwise));
                    }
                }
            } else {
                require(!feature_csv.empty(), ErrorCode::ConfigError, "--features is required");
                const auto fm = io::read_feature_csv(feature_csv);
                const auto values = column_or_pc1(fm, column);
                const std::string input = column.empty() ? "pc1_scores" : column;
                if (test_name == "normality") {
                    const auto sw = shapiro_wilk(values);
                    rec = test_record("shapiro_wilk", sw.w, nullptr, 0, 0, sw.p_value, std::nullopt, po.seed, {});
                    rec["input"] = input;
                    rec["n"] = sw.n;
                } else {
                    require(!labels_csv.empty(), ErrorCode::ConfigError, "--labels is required");
                    const GroupLabels groups(labels_for(fm.sample_ids(), labels_csv));
                    std::vector<std::vector<double>> per_group(groups.group_count());
                    for (std::size_t i = 0; i < values.size(); ++i) per_group[static_cast<std::size_t>(groups.group_index()[i])].push_back(values[i]);
                    const auto b = bartlett_test(per_group);
                    rec = test_record("bartlett", b.k_squared, b.df, 0, 0, b.p_value, std::nullopt, po.seed, {});
                    rec["input"] = input;
                }
            }
            emit(cfg.out_dir, rec.dump(2) + "\n");
        } else if (*pipeline) {
            if (!manifests.empty()) cfg.inputs = manifests;
            if (pk > 0) cfg.k = pk;
            if (pk_max) cfg.k_max = *pk_max;
            require(!cfg.out_dir.empty(), ErrorCode::ConfigError, "--out directory is required");
            cfg.validate();
            const auto rep = run_pipeline(cfg);
            const auto plots = write_outputs(rep, cfg.out_dir);
            for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
            for (const auto& e : plots.errors) std::cerr << "plot: " << e.what() << "\n";
            if (!rep.ok()) {
                for (const auto& e : rep.errors) std::cerr << "error in stage " << e.stage << ": " << e.message << "\n";
                return exit_code_for(rep.errors.front().code);
            }
            std::cout << "chosen k = " << rep.chosen_k << "; report written to " << (fs::path(cfg.out_dir) / "report.json").string() << "\n";
        } else if (*plot) {
            require(!cfg.out_dir.empty(), ErrorCode::ConfigError, "--out directory is required");
            std::ifstream in(report_path);
            require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open '" + report_path + "'");
            json report;
            try {
                report = json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorCode::ParseError, std::string("report is not valid JSON: ") + e.what());
            }
            const auto out = plots::emit_plots(report, cfg.out_dir);
            for (const auto& e : out.errors) std::cerr << e.what() << "\n";
            std::cout << "wrote " << out.files.size() << " files\n";
            if (!out.errors.empty()) return exit_code_for(out.errors.front().code());
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
