#ifndef FAULTDX_DATAGEN_HPP
#define FAULTDX_DATAGEN_HPP

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "datagen_constants.hpp"
#include "features.hpp"
#include "rng.hpp"

/**
 * @file datagen.hpp
 * @brief Deterministic synthetic vibration windows for six machine states.
 */

namespace faultdx {

enum class MachineState { normal_a, normal_b, imbalance, shaft_fault, power_off, repaired };

inline std::string to_string(MachineState s) {
    switch (s) {
        case MachineState::normal_a: return "normal_a";
        case MachineState::normal_b: return "normal_b";
        case MachineState::imbalance: return "imbalance";
        case MachineState::shaft_fault: return "shaft_fault";
        case MachineState::power_off: return "power_off";
        case MachineState::repaired: return "repaired";
    }
    return "unknown";
}

inline MachineState parse_machine_state(const std::string& s) {
    for (auto st : {MachineState::normal_a, MachineState::normal_b, MachineState::imbalance, MachineState::shaft_fault,
                    MachineState::power_off, MachineState::repaired}) {
        if (to_string(st) == s) return st;
    }
    throw Error(ErrorCode::ConfigError, "unknown machine state '" + s + "'");
}

struct MachineStateSpec {
    MachineState state = MachineState::normal_a;
    double base_freq_hz = datagen_defaults::kBaseFrequencyHz;
    /// Harmonic order (multiple of base_freq_hz) → amplitude in g.
    std::map<double, double> amplitudes;
    /// Harmonic order → phase offset (rad) relative to the rotor angle; absent orders use 0.
    std::map<double, double> phase_offsets;
    double noise_sigma = datagen_defaults::kNormalNoise;
    /// Relative per-window standard deviation of every harmonic amplitude.
    double amplitude_jitter = datagen_defaults::kAmplitudeJitter;
    double gain_x = 1.0;
    double gain_y = 1.0;

    void validate() const {
        require(base_freq_hz > 0.0, ErrorCode::ConfigError, "base frequency must be positive");
        require(noise_sigma >= 0.0 && amplitude_jitter >= 0.0, ErrorCode::ConfigError, "noise and jitter must be nonnegative");
        for (const auto& [h, amp] : amplitudes) {
            require(h > 0.0 && amp >= 0.0, ErrorCode::ConfigError, "harmonic orders must be positive and amplitudes nonnegative");
            if (state == MachineState::power_off) {
                require(amp == 0.0, ErrorCode::ConfigError, "power_off must have zero harmonic amplitudes");
            }
        }
    }

    double max_frequency() const {
        double f = 0.0;
        for (const auto& [h, amp] : amplitudes) {
            if (amp > 0.0) f = std::max(f, h * base_freq_hz);
        }
        return f;
    }
};

/// Default spec for each state, from datagen_constants.hpp.
inline MachineStateSpec default_state_spec(MachineState state, double base_freq_hz = datagen_defaults::kBaseFrequencyHz) {
    namespace d = datagen_defaults;
    MachineStateSpec s;
    s.state = state;
    s.base_freq_hz = base_freq_hz;
    switch (state) {
        case MachineState::normal_a:
            s.amplitudes = {{1.0, d::kNormal1x}, {2.0, d::kNormal2x}};
            s.phase_offsets = {{2.0, d::kNormal2xPhase}};
            s.gain_x = d::kNormalMajorGain;
            s.gain_y = d::kNormalMinorGain;
            break;
        case MachineState::normal_b:
            s.amplitudes = {{1.0, d::kNormal1x}, {2.0, d::kNormal2x}};
            s.phase_offsets = {{2.0, d::kNormal2xPhase}};
            s.gain_x = d::kNormalMinorGain;
            s.gain_y = d::kNormalMajorGain;
            break;
        case MachineState::imbalance:
            s.amplitudes = {{1.0, d::kImbalance1x}, {2.0, d::kImbalance2x}};
            s.phase_offsets = {{2.0, d::kImbalance2xPhase}};
            break;
        case MachineState::shaft_fault:
            s.amplitudes = {{0.5, d::kShaftHalf}, {1.0, d::kShaft1x}, {2.0, d::kShaft2x}};
            s.phase_offsets = {{2.0, d::kShaft2xPhase}};
            s.noise_sigma = d::kShaftNoise;
            break;
        case MachineState::power_off:
            s.noise_sigma = d::kPowerOffNoise;
            s.amplitude_jitter = 0.0;
            break;
        case MachineState::repaired:
            s.amplitudes = {{1.0, d::kRepaired1x}, {2.0, d::kRepaired2x}, {3.0, d::kRepaired3x}};
            s.phase_offsets = {{2.0, d::kRepaired2xPhase}};
            s.noise_sigma = d::kRepairedNoise;
            break;
    }
    return s;
}

/// The six default states with `count` windows each. `contrast` swaps in the large imbalance jitter.
inline std::vector<std::pair<MachineStateSpec, int>> default_states(int count = datagen_defaults::kWindowsPerState, bool contrast = false) {
    std::vector<std::pair<MachineStateSpec, int>> out;
    for (auto st : {MachineState::normal_a, MachineState::normal_b, MachineState::imbalance, MachineState::shaft_fault,
                    MachineState::power_off, MachineState::repaired}) {
        auto spec = default_state_spec(st);
        if (contrast && st == MachineState::imbalance) spec.amplitude_jitter = datagen_defaults::kContrastJitter;
        out.emplace_back(std::move(spec), count);
    }
    return out;
}

struct SyntheticDataset {
    std::vector<Observation> observations;
    /// Ground-truth state index (position in the input state list) per observation.
    Labels labels;
    std::vector<std::string> state_names;
};

/**
 * One window of every state's channels:
 *   x[t] = gain · Σ_h A_h(1 + jitter·ε_h) sin(2π h f0 t + φ_h) + σ·η_t
 * with φ_h = h·θ + offset_h for a uniform rotor angle θ, and ε, η standard normal. Window `index` of state `s` draws from
 * the stream keyed on (seed, state, index), so windows can be generated in any order.
 */
inline Observation synth_window(const MachineStateSpec& spec, double fs, int window_len, std::uint64_t seed, int index) {
    CounterRng rng(seed, {0x64617461ULL, static_cast<std::uint64_t>(spec.state), static_cast<std::uint64_t>(index)});
    Observation obs;
    for (const auto& [channel, gain] : {std::pair<const char*, double>{"x", spec.gain_x}, {"y", spec.gain_y}}) {
        std::vector<std::pair<double, double>> tones;  // (frequency, amplitude)
        std::vector<double> phases;
        // Harmonics are phase-locked to the rotor: order h sits at h·θ + offset_h.
        const double rotor = 2.0 * std::numbers::pi * rng.uniform();
        for (const auto& [h, amp] : spec.amplitudes) {
            const double a = amp * std::max(0.0, 1.0 + spec.amplitude_jitter * rng.normal());
            tones.emplace_back(h * spec.base_freq_hz, gain * a);
            const auto off = spec.phase_offsets.find(h);
            phases.push_back(h * rotor + (off == spec.phase_offsets.end() ? 0.0 : off->second));
        }
        TimeSeriesWindow w;
        w.channel_id = channel;
        w.sampling_rate_hz = fs;
        w.samples.resize(static_cast<std::size_t>(window_len));
        for (int t = 0; t < window_len; ++t) {
            const double ts = static_cast<double>(t) / fs;
            double v = 0.0;
            for (std::size_t h = 0; h < tones.size(); ++h) {
                v += tones[h].second * std::sin(2.0 * std::numbers::pi * tones[h].first * ts + phases[h]);
            }
            w.samples[static_cast<std::size_t>(t)] = v + spec.noise_sigma * rng.normal();
        }
        obs.channels.push_back(std::move(w));
    }
    return obs;
}

inline SyntheticDataset synth_dataset(const std::vector<std::pair<MachineStateSpec, int>>& states, double fs, int window_len, std::uint64_t seed) {
    require(window_len >= 256, ErrorCode::ConfigError, "window length must be at least 256");
    require(fs > 0.0, ErrorCode::ConfigError, "sampling rate must be positive");
    SyntheticDataset ds;
    long long ts = datagen_defaults::kStartEpoch;
    for (std::size_t s = 0; s < states.size(); ++s) {
        const auto& [spec, count] = states[s];
        spec.validate();
        require(fs > 2.0 * spec.max_frequency(), ErrorCode::AliasError,
                "sampling rate " + std::to_string(fs) + " Hz aliases the " + std::to_string(spec.max_frequency()) + " Hz component of " + to_string(spec.state));
        require(count >= 0, ErrorCode::ConfigError, "window count must be nonnegative");
        ds.state_names.push_back(to_string(spec.state));
        for (int i = 0; i < count; ++i) {
            auto obs = synth_window(spec, fs, window_len, seed, i);
            obs.sample_id = to_string(spec.state) + "_" + std::to_string(i);
            obs.timestamp = ts;
            for (auto& w : obs.channels) w.timestamp = ts;
            ts += datagen_defaults::kAcquisitionPeriodS;
            ds.observations.push_back(std::move(obs));
            ds.labels.push_back(static_cast<int>(s));
        }
    }
    return ds;
}

/// Default feature configuration matching the generator: bands at 0.5x/1x/2x/3x of the base frequency.
inline FeatureConfig default_feature_config(double base_freq_hz = datagen_defaults::kBaseFrequencyHz) {
    FeatureConfig cfg;
    for (double order : datagen_defaults::kBandOrders) {
        cfg.bands.push_back({order * base_freq_hz, datagen_defaults::kBandHalfwidthHz});
    }
    return cfg;
}

/// Isotropic Gaussian blobs centred on distinct axes. Center c lies at distance separation·(1 + 0.1c) from the
/// origin, so the blobs are not equidistant and the WSS curve drops steeply up to k.
struct BlobData {
    FeatureMatrix matrix;
    Labels labels;
};

inline BlobData gaussian_blobs(int k, int per_blob, int dim, double separation, double sigma, std::uint64_t seed) {
    require(k >= 1 && per_blob >= 1 && dim >= 1, ErrorCode::InvalidArgument, "blob sizes must be positive");
    CounterRng rng(seed, {0x626c6f62ULL});
    Matrix centers = Matrix::Zero(k, dim);
    for (int c = 0; c < k; ++c) {
        // Center c sits on axis (c mod dim), pushed out by its layer so centers stay distinct for k > dim.
        const int axis = c % dim;
        const int layer = c / dim;
        centers(c, axis) = separation * (1.0 + 0.1 * c) * (layer % 2 == 0 ? 1.0 : -1.0) * (1 + layer / 2);
    }
    Matrix x(k * per_blob, dim);
    BlobData out;
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < per_blob; ++i) {
            const int row = c * per_blob + i;
            for (int d = 0; d < dim; ++d) x(row, d) = centers(c, d) + sigma * rng.normal();
            out.labels.push_back(c);
        }
    }
    out.matrix = FeatureMatrix::from_values(std::move(x));
    return out;
}

}  // namespace faultdx

#endif
