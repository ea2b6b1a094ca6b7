#ifndef FAULTDX_DATAGEN_CONSTANTS_HPP
#define FAULTDX_DATAGEN_CONSTANTS_HPP

// Default parameters of the synthetic six-state machine generator.
//
// Harmonic amplitudes are in g, keyed by multiple of the running speed. Channel
// gains scale the whole signal per axis. The two normal states are mirror images
// across the x/y axes, so they are distinct clusters with identical dispersion.
// Values were tuned so that six well-separated clusters emerge from the default
// feature set (nine time features plus 0.5x/1x/2x/3x band amplitudes per axis).

namespace faultdx::datagen_defaults {

inline constexpr double kSamplingRateHz = 2048.0;
inline constexpr double kBaseFrequencyHz = 26.1;
inline constexpr int kWindowLength = 2048;
inline constexpr int kWindowsPerState = 30;
inline constexpr long long kStartEpoch = 1546300800;  // 2019-01-01T00:00:00Z
inline constexpr long long kAcquisitionPeriodS = 600;

inline constexpr double kNormalNoise = 0.2;
inline constexpr double kAmplitudeJitter = 0.03;

// normal_a / normal_b
inline constexpr double kNormal1x = 1.0;
inline constexpr double kNormal2x = 0.3;
inline constexpr double kNormalMajorGain = 1.0;
inline constexpr double kNormalMinorGain = 0.25;

// Phase offset of the 2x harmonic relative to the rotor angle. A quarter-turn
// offset makes the waveform skewed; its sign sets the direction of the skew.
inline constexpr double kNormal2xPhase = 1.5707963267948966;
inline constexpr double kImbalance2xPhase = 0.0;
inline constexpr double kShaft2xPhase = -1.5707963267948966;
inline constexpr double kRepaired2xPhase = -1.5707963267948966;

// imbalance: at least twice the normal 1x amplitude
inline constexpr double kImbalance1x = 2.5;
inline constexpr double kImbalance2x = 0.3;

// shaft_fault: half-order subharmonic plus a strong 2x
inline constexpr double kShaftHalf = 0.8;
inline constexpr double kShaft1x = 1.0;
inline constexpr double kShaft2x = 0.6;
inline constexpr double kShaftNoise = 0.25;

// power_off: noise only
inline constexpr double kPowerOffNoise = 0.01;

// repaired: lower 1x with a visible 3x
inline constexpr double kRepaired1x = 0.6;
inline constexpr double kRepaired2x = 0.15;
inline constexpr double kRepaired3x = 0.3;
inline constexpr double kRepairedNoise = 0.15;

// Radius-contrast variant: imbalance windows get this amplitude jitter instead.
inline constexpr double kContrastJitter = 0.25;

// Default feature bands, as multiples of the base frequency, and their halfwidth.
inline constexpr double kBandOrders[] = {0.5, 1.0, 2.0, 3.0};
inline constexpr double kBandHalfwidthHz = 1.5;

}  // namespace faultdx::datagen_defaults

#endif
