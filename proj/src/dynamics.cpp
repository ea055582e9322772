#include "acsa/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include <boost/numeric/odeint.hpp>
#include <fftw3.h>

#include "acsa/error.hpp"

namespace acsa {
namespace {

using State = std::array<double, 18>;

State to_state(const Vector9& v) {
    State s{};
    for (int k = 0; k < 9; ++k) {
        s[2 * k] = v(k).real();
        s[2 * k + 1] = v(k).imag();
    }
    return s;
}

Matrix3 to_matrix(const State& s) {
    Vector9 v;
    for (int k = 0; k < 9; ++k) v(k) = {s[2 * k], s[2 * k + 1]};
    return unvectorize(v);
}

namespace odeint = boost::numeric::odeint;

// Mixed absolute/relative error of the embedded estimate, per unit of time.
class PerUnitTimeErrorChecker {
public:
    using value_type = double;
    using algebra_type = odeint::array_algebra;
    using operations_type = odeint::default_operations;

    explicit PerUnitTimeErrorChecker(double tol = 1e-10) : tol_(tol) {}

    template <class S, class D, class E, class T>
    double error(algebra_type&, const S& x_old, const D&, E& x_err, T dt) const {
        double worst = 0.0;
        for (std::size_t i = 0; i < x_old.size(); ++i)
            worst = std::max(worst, std::abs(x_err[i]) / (tol_ * (1.0 + std::abs(x_old[i]))));
        return worst / std::abs(dt);
    }

private:
    double tol_;
};

using Dopri5 = odeint::runge_kutta_dopri5<State>;
using Controlled = odeint::controlled_runge_kutta<Dopri5, PerUnitTimeErrorChecker>;
using DenseStepper = odeint::dense_output_runge_kutta<Controlled>;

void check_physical(const Matrix3& rho, double limit, const char* where) {
    const auto report = physicality(rho);
    if (report.trace_error > limit || report.hermiticity_error > limit || report.min_eigenvalue < -limit)
        throw Error(ErrorCode::NonPhysicalState, std::string(where) + ": trace/hermiticity/positivity violated");
}

// FFTW's planner is not thread-safe.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanDeleter {
    void operator()(fftw_plan_s* plan) const {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
};

std::vector<Complex> backward_dft(std::vector<Complex> input) {
    const int n = static_cast<int>(input.size());
    std::vector<Complex> output(input.size());
    std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan.reset(fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(input.data()),
                                    reinterpret_cast<fftw_complex*>(output.data()), FFTW_BACKWARD,
                                    FFTW_ESTIMATE));
    }
    fftw_execute(plan.get());
    return output;
}

}  // namespace

std::string_view to_string(InitialState state) {
    switch (state) {
    case InitialState::a: return "a";
    case InitialState::b: return "b";
    case InitialState::c: return "c";
    case InitialState::mixed: return "mixed";
    }
    return "unknown";
}

std::optional<InitialState> parse_initial_state(std::string_view text) {
    for (auto s : {InitialState::a, InitialState::b, InitialState::c, InitialState::mixed})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

Matrix3 initial_density(InitialState state) {
    switch (state) {
    case InitialState::a: return pure_state(Level::a);
    case InitialState::b: return pure_state(Level::b);
    case InitialState::c: return pure_state(Level::c);
    case InitialState::mixed: return Matrix3::Identity() / 3.0;
    }
    return Matrix3::Zero();
}

TimeGrid TimeGrid::covering(double t_final, double dt) {
    if (!(dt > 0.0) || !(t_final > 0.0) || !std::isfinite(t_final) || !std::isfinite(dt))
        throw Error(ErrorCode::InvalidGrid, "t_final and dt must be positive and finite");
    const double steps = std::floor(t_final / dt + 1e-9);
    return {dt, static_cast<std::size_t>(steps) + 1};
}

std::vector<Complex> Trajectory::coherence(CoherencePair pair) const {
    std::vector<Complex> out;
    out.reserve(states.size());
    for (const auto& rho : states) out.push_back(acsa::coherence(rho, pair));
    return out;
}

Trajectory evolve(const SystemParams& params, const Matrix3& rho0, const TimeGrid& grid, double tol,
                  std::string initial_label) {
    if (!(tol >= 1e-12 && tol <= 1e-4))
        throw Error(ErrorCode::InvalidOption, "tol must lie in [1e-12, 1e-4]");
    if (grid.samples < 2 || !(grid.dt > 0.0))
        throw Error(ErrorCode::InvalidGrid, "time grid needs dt > 0 and at least two samples");
    check_physical(rho0, 1e-12, "initial state");

    const Superoperator l = build_liouvillian(params);
    auto rhs = [&l](const State& x, State& dxdt, double /*t*/) {
        Eigen::Map<const Vector9> v(reinterpret_cast<const Complex*>(x.data()));
        Eigen::Map<Vector9> dv(reinterpret_cast<Complex*>(dxdt.data()));
        dv.noalias() = l * v;
    };

    Trajectory traj;
    traj.params = params;
    traj.initial_state = std::move(initial_label);
    traj.times.resize(grid.samples);
    for (std::size_t k = 0; k < grid.samples; ++k) traj.times[k] = grid.dt * static_cast<double>(k);
    traj.states.reserve(grid.samples);

    const double limit = 100.0 * tol;
    auto observe = [&](const State& x, double /*t*/) {
        Matrix3 rho = to_matrix(x);
        check_physical(rho, limit, "trajectory sample");
        traj.states.push_back(rho);
    };

    State x = to_state(vectorize(rho0));
    DenseStepper stepper{Controlled(PerUnitTimeErrorChecker(tol))};
    try {
        odeint::integrate_times(stepper, rhs, x, traj.times.begin(), traj.times.end(), grid.dt, observe);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::StepFailure, e.what());
    }
    if (traj.states.size() != grid.samples)
        throw Error(ErrorCode::StepFailure, "integrator stopped before the end of the grid");
    return traj;
}

std::string_view to_string(Window window) {
    switch (window) {
    case Window::rectangular: return "rectangular";
    case Window::hann: return "hann";
    }
    return "unknown";
}

std::optional<Window> parse_window(std::string_view text) {
    for (auto w : {Window::rectangular, Window::hann})
        if (to_string(w) == text) return w;
    return std::nullopt;
}

Spectrum spectrum(std::span<const Complex> samples, double dt, double carrier, Window window,
                  std::optional<Complex> subtract) {
    const std::size_t n = samples.size();
    if (n < kMinSpectrumSamples)
        throw Error(ErrorCode::TooFewSamples, "need at least " + std::to_string(kMinSpectrumSamples) + " samples");

    std::vector<Complex> input(samples.begin(), samples.end());
    if (subtract)
        for (auto& x : input) x -= *subtract;
    if (window == Window::hann) {
        for (std::size_t k = 0; k < n; ++k)
            input[k] *= 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
    }

    const std::vector<Complex> out = backward_dft(std::move(input));

    Spectrum s;
    s.resolution = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    s.carrier = carrier;
    s.window = window;
    s.steady_subtracted = subtract.has_value();
    s.nu.resize(n);
    s.amplitude.resize(n);
    s.transform.resize(n);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    const auto size = static_cast<std::ptrdiff_t>(n);
    for (std::ptrdiff_t j = 0; j < size; ++j) {
        const std::ptrdiff_t m = j - half;
        const std::size_t bin = static_cast<std::size_t>((m + size) % size);
        s.nu[j] = carrier + static_cast<double>(m) * s.resolution;
        s.transform[j] = out[bin];
        s.amplitude[j] = std::abs(out[bin]);
    }
    return s;
}

Spectrum spectrum(const Trajectory& trajectory, const SpectrumOptions& options) {
    if (trajectory.times.size() < 2)
        throw Error(ErrorCode::TooFewSamples, "trajectory has fewer than two samples");
    const double dt = trajectory.times[1] - trajectory.times[0];
    const double carrier = trajectory.params.delta_p - trajectory.params.delta_l;

    std::optional<Complex> steady_value;
    if (options.subtract_steady) {
        const auto ss = steady_state(build_liouvillian(trajectory.params));
        steady_value = coherence(ss.rho, options.pair);
    }
    const auto samples = trajectory.coherence(options.pair);
    return spectrum(samples, dt, carrier, options.window, steady_value);
}

std::vector<Peak> find_peaks(const Spectrum& spectrum, double min_prominence) {
    const auto& y = spectrum.amplitude;
    const std::size_t n = y.size();
    std::vector<Peak> peaks;
    if (n < 3) return peaks;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;

        double left_base = y[i];
        for (std::size_t j = i; j-- > 0;) {
            if (y[j] > y[i]) break;
            left_base = std::min(left_base, y[j]);
        }
        double right_base = y[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (y[j] > y[i]) break;
            right_base = std::min(right_base, y[j]);
        }
        const double prominence = y[i] - std::max(left_base, right_base);
        if (prominence < min_prominence || prominence <= 0.0) continue;

        const double a = y[i - 1], b = y[i], c = y[i + 1];
        const double curvature = a - 2.0 * b + c;
        const double shift = curvature != 0.0 ? 0.5 * (a - c) / curvature : 0.0;

        Peak p;
        p.nu_center = spectrum.nu[i] + shift * spectrum.resolution;
        p.height = b - 0.25 * (a - c) * shift;
        p.prominence = prominence;

        const double half = 0.5 * p.height;
        double left = spectrum.nu.front();
        for (std::size_t j = i; j-- > 0;) {
            if (y[j] < half) {
                left = spectrum.nu[j] + (half - y[j]) / (y[j + 1] - y[j]) * spectrum.resolution;
                break;
            }
        }
        double right = spectrum.nu.back();
        for (std::size_t j = i + 1; j < n; ++j) {
            if (y[j] < half) {
                right = spectrum.nu[j] - (half - y[j]) / (y[j - 1] - y[j]) * spectrum.resolution;
                break;
            }
        }
        p.fwhm = std::max(right - left, spectrum.resolution);
        peaks.push_back(p);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [](const Peak& l, const Peak& r) { return l.height > r.height; });
    return peaks;
}

}  // namespace acsa
