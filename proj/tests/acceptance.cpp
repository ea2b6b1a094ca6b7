// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <faultdx/cluster.hpp>
#include <faultdx/datagen.hpp>
#include <faultdx/hypotest.hpp>
#include <faultdx/ordination.hpp>
#include <faultdx/pipeline.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "reference/shapiro_reference.hpp"

using namespace faultdx;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

PermutationOptions perms(std::size_t b, std::uint64_t seed, unsigned workers = 1) {
    PermutationOptions o;
    o.permutations = b;
    o.seed = seed;
    o.workers = workers;
    return o;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Outcome anova_equivalence() {
    std::mt19937_64 gen(1);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto inst = fixture::random_univariate(gen);
        const double f = permanova(inst.dm, inst.groups, perms(1, 0)).pseudo_f;
        const double ref = oracle::anova_f(inst.values);
        worst = std::max(worst, std::abs(f - ref) / ref);
    }
    return {worst <= 1e-10, "max relative deviation " + fmt(worst)};
}

Outcome hand_instance() {
    const auto inst = fixture::univariate({{1, 2, 3}, {7, 8, 9}});
    const auto r = permanova(inst.dm, inst.groups, perms(999, 0));
    bool ok = std::abs(r.ss_total - 58) <= 1e-12 && std::abs(r.ss_among - 54) <= 1e-12 && std::abs(r.ss_within - 4) <= 1e-12 &&
              std::abs(r.pseudo_f - 54) <= 1e-12;
    const std::vector<double> v = {1, 2, 3, 7, 8, 9};
    int hits = 0, total = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) != 3) continue;
        std::vector<std::vector<double>> g(2);
        for (unsigned i = 0; i < 6; ++i) g[(mask >> i) & 1u].push_back(v[i]);
        ++total;
        hits += oracle::anova_f(g) >= 54.0 - 1e-9;
    }
    const double exact = static_cast<double>(hits) / total;
    ok = ok && exact == 0.1;
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const double p = permanova(inst.dm, inst.groups, perms(999, seed)).test.p_value;
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    ok = ok && lo >= 0.07 && hi <= 0.13;
    return {ok, "SS_T " + fmt(r.ss_total) + ", SS_A " + fmt(r.ss_among) + ", SS_W " + fmt(r.ss_within) + ", F " + fmt(r.pseudo_f) +
                    ", exact p " + fmt(exact) + ", permutation p in [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

Outcome minimum_p() {
    std::vector<std::vector<double>> g(2);
    for (int i = 0; i < 20; ++i) {
        g[0].push_back(0.1 * i);
        g[1].push_back(100.0 + 0.1 * i);
    }
    const auto inst = fixture::univariate(g);
    const auto r = permanova(inst.dm, inst.groups, perms(999, 3));
    return {r.test.exceedances == 0 && r.test.p_value == 0.001, "exceedances " + std::to_string(r.test.exceedances) + ", p " + fmt(r.test.p_value)};
}

Outcome null_calibration() {
    int ra = 0, rd = 0;
    for (int s = 0; s < 500; ++s) {
        const auto inst = fixture::null_instance(90000 + static_cast<std::uint64_t>(s));
        ra += permanova(inst.dm, inst.groups, perms(199, static_cast<std::uint64_t>(s))).test.p_value <= 0.05;
        rd += permdisp(inst.dm, inst.groups, perms(199, static_cast<std::uint64_t>(s))).test.p_value <= 0.05;
    }
    const double fa = ra / 500.0, fd = rd / 500.0;
    return {fa >= 0.03 && fa <= 0.08 && fd >= 0.03 && fd <= 0.08, "permanova rate " + fmt(fa) + ", permdisp rate " + fmt(fd)};
}

Outcome ordination_consistency() {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> nd;
    double worst_d = 0.0, worst_e = 0.0;
    Index imaginary = 0;
    for (int t = 0; t < 100; ++t) {
        const Index n = 5 + t % 30;
        const Index p = 2 + t % 6;
        Matrix x(n, p);
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < p; ++j) x(i, j) = nd(gen);
        }
        const auto fm = FeatureMatrix::from_values(x);
        const auto dm = distance_matrix(fm, Metric::euclidean);
        const auto co = pcoa(dm);
        imaginary += co.imaginary_coords.cols();
        Matrix rec(n, n);
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) rec(i, j) = (co.coords.row(i) - co.coords.row(j)).norm();
        }
        worst_d = std::max(worst_d, (rec - dm.values()).norm() / dm.values().norm());
        const auto pc = pca(fm, 1);
        const std::size_t m = static_cast<std::size_t>(std::min(n - 1, p));
        if (co.eigenvalues.size() != m) return {false, "retained PCoA axes " + std::to_string(co.eigenvalues.size()) + " != " + std::to_string(m)};
        for (std::size_t j = 0; j < m; ++j) {
            const double ref = static_cast<double>(n - 1) * pc.eigenvalues[j];
            worst_e = std::max(worst_e, std::abs(co.eigenvalues[j] - ref) / ref);
        }
    }
    return {worst_d <= 1e-8 && worst_e <= 1e-8 && imaginary == 0,
            "distance deviation " + fmt(worst_d) + ", eigenvalue deviation " + fmt(worst_e) + ", imaginary axes " + std::to_string(imaginary)};
}

Outcome em_monotonicity() {
    double worst_step = 0.0, worst_sum = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const int k = s % 2 ? 3 : 2;
        const int p = (s / 2) % 2 ? 6 : 2;
        const auto blobs = gaussian_blobs(k, 30, p, 2.5, 1.0, 700 + s);
        GmmOptions o;
        o.seed = s;
        const auto m = gmm_fit(blobs.matrix, k, o);
        for (std::size_t i = 1; i < m.loglik_trace.size(); ++i) worst_step = std::min(worst_step, m.loglik_trace[i] - m.loglik_trace[i - 1]);
        const auto pred = gmm_predict(m, blobs.matrix);
        worst_sum = std::max(worst_sum, (pred.responsibilities.rowwise().sum().array() - 1.0).abs().maxCoeff());
    }
    return {worst_step >= -1e-8 && worst_sum <= 1e-12, "most negative step " + fmt(worst_step) + ", max row-sum error " + fmt(worst_sum)};
}

struct StateMap {
    int normal_a = -1;
    int normal_b = -1;
};

/// Cluster holding the majority of each normal state's windows.
StateMap map_normals(const Labels& clusters, const Labels& truth) {
    std::map<int, std::map<int, int>> counts;
    for (std::size_t i = 0; i < clusters.size(); ++i) ++counts[clusters[i]][truth[i]];
    StateMap out;
    for (const auto& [c, m] : counts) {
        int best = -1, n = 0;
        for (const auto& [st, cnt] : m) {
            if (cnt > n) n = cnt, best = st;
        }
        if (best == 0) out.normal_a = c;
        if (best == 1) out.normal_b = c;
    }
    return out;
}

Outcome end_to_end() {
    int k6 = 0, permanova_ok = 0, permdisp_ok = 0, pair_ok = 0, errors = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto ds = synth_dataset(default_states(30, true), datagen_defaults::kSamplingRateHz, datagen_defaults::kWindowLength, seed);
        PipelineConfig cfg;
        cfg.seed = seed;
        cfg.gmm_criteria = false;
        const auto rep = diagnose(ds.observations, cfg);
        if (!rep.ok()) {
            ++errors;
            continue;
        }
        k6 += rep.chosen_k == 6;
        permanova_ok += rep.permanova->test.p_value <= 0.005;
        permdisp_ok += rep.dispersion->test.p_value <= 0.01;
        const auto sm = map_normals(rep.labels, ds.labels);
        const auto& g = rep.dispersion->groups;
        const auto ia = std::find(g.begin(), g.end(), sm.normal_a) - g.begin();
        const auto ib = std::find(g.begin(), g.end(), sm.normal_b) - g.begin();
        const auto groups = static_cast<long>(g.size());
        if (sm.normal_a < 0 || sm.normal_b < 0 || sm.normal_a == sm.normal_b || ia >= groups || ib >= groups) continue;
        const double observed = rep.dispersion->pairwise(std::max(ia, ib), std::min(ia, ib));
        const double permuted = rep.dispersion->pairwise(std::min(ia, ib), std::max(ia, ib));
        pair_ok += observed > 0.05 && permuted > 0.05;
    }
    const bool ok = errors == 0 && k6 >= 45 && permanova_ok == 50 && permdisp_ok == 50 && pair_ok >= 45;
    return {ok, "over 50 seeds: k=6 in " + std::to_string(k6) + ", PERMANOVA p<=0.005 in " + std::to_string(permanova_ok) +
                    ", permdisp p<=0.01 in " + std::to_string(permdisp_ok) + ", normal_a/normal_b both p>0.05 in " + std::to_string(pair_ok) +
                    ", stage errors " + std::to_string(errors)};
}

Outcome bartlett_closed_form() {
    std::mt19937_64 gen(8);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        auto g = fixture::random_univariate(gen).values;
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (double& v : g[i]) v *= 1.0 + 0.5 * static_cast<double>(i);
        }
        const double ref = oracle::bartlett_k2(g);
        worst = std::max(worst, std::abs(bartlett_test(g).k_squared - ref) / std::max(1.0, std::abs(ref)));
    }
    std::vector<std::vector<double>> worked(2);
    for (double v : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        worked[0].push_back(v * std::sqrt(1.0 / 2.5));
        worked[1].push_back(v * std::sqrt(4.0 / 2.5));
    }
    const auto r = bartlett_test(worked);
    const bool ok = worst <= 1e-10 && std::abs(r.k_squared - 1.5868) <= 1e-3 && std::abs(r.p_value - 0.2077) <= 1e-3;
    return {ok, "max deviation " + fmt(worst) + ", worked K2 " + fmt(r.k_squared) + ", p " + fmt(r.p_value)};
}

Outcome shapiro_reference() {
    double worst_w = 0.0, worst_p = 0.0;
    for (const auto& c : shapiro_cases()) {
        const auto r = shapiro_wilk(c.x);
        worst_w = std::max(worst_w, std::abs(r.w - c.w));
        worst_p = std::max(worst_p, std::abs(r.p_value - c.p) / c.p);
    }
    return {shapiro_cases().size() == 20 && worst_w <= 1e-3 && worst_p <= 0.1,
            std::to_string(shapiro_cases().size()) + " vectors, max |dW| " + fmt(worst_w) + ", max relative dp " + fmt(worst_p)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int sh(const std::string& cmd) {
    const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
    const fs::path root = fs::temp_directory_path() / "faultdx_acceptance";
    fs::remove_all(root);
    const std::string cli = FAULTDX_CLI_PATH;
    const std::string r = root.string();
    if (sh(cli + " datagen --seed 4 --out " + r + "/data") != 0) return {false, "datagen failed"};
    for (const char* run : {"a", "b"}) {
        const int code = sh(cli + " pipeline --seed 4 --manifest " + r + "/data/manifest.csv --out " + r + "/" + run);
        if (code != 0) return {false, std::string("pipeline run ") + run + " exited " + std::to_string(code)};
    }
    std::size_t compared = 0, differing = 0;
    std::vector<fs::path> files = {"report.json"};
    for (const auto& e : fs::directory_iterator(root / "a" / "plots")) {
        if (e.path().extension() == ".csv") files.push_back(fs::path("plots") / e.path().filename());
    }
    for (const auto& f : files) {
        ++compared;
        if (!fs::exists(root / "b" / f) || slurp(root / "a" / f) != slurp(root / "b" / f)) ++differing;
    }

    const auto inst = fixture::null_instance(31);
    const auto a1 = permanova(inst.dm, inst.groups, perms(999, 2, 1));
    const auto a8 = permanova(inst.dm, inst.groups, perms(999, 2, 8));
    const auto d1 = permdisp(inst.dm, inst.groups, perms(999, 2, 1));
    const auto d8 = permdisp(inst.dm, inst.groups, perms(999, 2, 8));
    bool same = a1.test.exceedances == a8.test.exceedances && a1.test.p_value == a8.test.p_value && d1.test.exceedances == d8.test.exceedances &&
                d1.test.p_value == d8.test.p_value;
    for (Index i = 0; i < d1.pairwise.rows(); ++i) {
        for (Index j = 0; j < d1.pairwise.cols(); ++j) {
            if (i != j) same = same && d1.pairwise(i, j) == d8.pairwise(i, j);
        }
    }
    return {differing == 0 && compared >= 9 && same,
            std::to_string(compared) + " files compared, " + std::to_string(differing) + " differ; workers 1 vs 8 " + (same ? "identical" : "differ")};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 means no runtime limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "PERMANOVA equals one-way ANOVA F", 5.0, anova_equivalence},
        {2, "hand-verified PERMANOVA instance", 0.0, hand_instance},
        {3, "minimum attainable p is 0.001", 0.0, minimum_p},
        {4, "null calibration of permutation p", 60.0, null_calibration},
        {5, "PCoA/PCA consistency", 0.0, ordination_consistency},
        {6, "EM log-likelihood monotonicity", 0.0, em_monotonicity},
        {7, "end-to-end synthetic diagnosis", 30.0, end_to_end},
        {8, "closed-form Bartlett", 0.0, bartlett_closed_form},
        {9, "Shapiro-Wilk against reference values", 0.0, shapiro_reference},
        {10, "determinism of pipeline output and permutations", 0.0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0.0 && secs >= c.limit_s) {
            o.pass = false;
            o.detail += "; runtime limit " + fmt(c.limit_s) + " s exceeded";
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << o.detail << "; " << fmt(secs) << " s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
