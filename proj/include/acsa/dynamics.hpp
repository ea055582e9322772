#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acsa/model.hpp"
#include "acsa/steady.hpp"
#include "acsa/types.hpp"

namespace acsa {

enum class InitialState { a, b, c, mixed };

std::string_view to_string(InitialState state);
std::optional<InitialState> parse_initial_state(std::string_view text);
Matrix3 initial_density(InitialState state);

/// Uniform output grid t_k = k dt, k = 0 .. samples - 1.
struct TimeGrid {
    double dt = 0.05;
    std::size_t samples = 2048;

    double t_final() const { return dt * static_cast<double>(samples - 1); }

    /// Grid with step dt covering [0, t_final].
    static TimeGrid covering(double t_final, double dt);
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Matrix3> states;
    SystemParams params;
    std::string initial_state;

    std::vector<Complex> coherence(CoherencePair pair) const;
};

/// Integrates d rho/dt = L rho with an adaptive Dormand-Prince 5(4) pair
/// (mixed absolute/relative local error at most tol per unit time) and samples
/// the dense output on the grid.
///
/// Throws StepFailure if the step controller gives up and NonPhysicalState if a
/// sample leaves the physical set by more than 100 tol.
Trajectory evolve(const SystemParams& params, const Matrix3& rho0, const TimeGrid& grid, double tol,
                  std::string initial_label = "custom");

enum class Window { rectangular, hann };

std::string_view to_string(Window window);
std::optional<Window> parse_window(std::string_view text);

struct SpectrumOptions {
    Window window = Window::rectangular;
    bool subtract_steady = false;
    CoherencePair pair = CoherencePair::ab;
};

struct Spectrum {
    std::vector<double> nu;          // offsets from the bare |a>-|b> frequency, ascending
    std::vector<double> amplitude;   // |transform|
    std::vector<Complex> transform;
    double resolution = 0.0;         // 2 pi / (N dt)
    double carrier = 0.0;            // nu of the zero-frequency (steady) component
    Window window = Window::rectangular;
    bool steady_subtracted = false;
};

constexpr std::size_t kMinSpectrumSamples = 64;

/// Discrete transform X(nu) = sum_k x_k exp(+i (nu - carrier) t_k).
///
/// A component e^{-i w t} of the input lands at nu = carrier + w, so the
/// constant (steady) part of rho_ab sits at carrier = delta_p - delta_l.
/// Throws TooFewSamples below kMinSpectrumSamples.
Spectrum spectrum(std::span<const Complex> samples, double dt, double carrier, Window window,
                  std::optional<Complex> subtract = std::nullopt);

Spectrum spectrum(const Trajectory& trajectory, const SpectrumOptions& options = {});

struct Peak {
    double nu_center = 0.0;
    double height = 0.0;
    double fwhm = 0.0;
    double prominence = 0.0;
};

/// Local maxima whose topographic prominence is at least min_prominence.
/// Centers and heights use a three-point parabolic fit; FWHM is measured by
/// linear interpolation of the half-height crossings and never drops below one bin.
/// Sorted by descending height.
std::vector<Peak> find_peaks(const Spectrum& spectrum, double min_prominence);

}  // namespace acsa
