// Acceptance checks. Usage: acsa_acceptance [criterion]
// Prints one "[PASS]" or "[FAIL]" line per criterion and exits nonzero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "acsa/analytic.hpp"
#include "acsa/config.hpp"
#include "acsa/dynamics.hpp"
#include "acsa/error.hpp"
#include "acsa/io.hpp"
#include "acsa/model.hpp"
#include "acsa/scan.hpp"
#include "acsa/steady.hpp"

using namespace acsa;
using std::numbers::pi;

namespace {

const double kTol = DynamicsSettings{}.tol;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

SystemParams fig3(double delta_phi = 0.0) {
    SystemParams p;
    p.omega_l = 10.0;
    p.omega_p = 0.37;
    p.phi_p = delta_phi;
    return p;
}

SystemParams fig5(double delta_p) {
    SystemParams p;
    p.omega_l = 10.0;
    p.omega_p = 0.1;
    p.delta_p = delta_p;
    return p;
}

const ScanRecord& nearest(const ScanTable& t, double dp) {
    return *std::min_element(t.records.begin(), t.records.end(), [dp](const auto& x, const auto& y) {
        return std::abs(x.delta_p - dp) < std::abs(y.delta_p - dp);
    });
}

Verdict eit_resonance() {
    const Matrix3 rho = steady_state(build_liouvillian(fig3())).rho;
    const Complex ac = coherence(rho, CoherencePair::ac), ab = coherence(rho, CoherencePair::ab);
    const bool pass = std::abs(ac) <= 1e-3 && std::abs(ab - (-0.037)) <= 0.05 * 0.037;
    return {pass, fmt("|rho_ac|=%.3e (<=1e-3), rho_ab=%.6f%+.6fi (target -0.037 +/- %.2e)", std::abs(ac), ab.real(),
                      ab.imag(), 0.05 * 0.037)};
}

Verdict dressed_gain_absorption() {
    const Grid1D g = default_detuning_grid();
    const auto t = sweep_detuning(fig3(), g);
    const double lower = nearest(t, -10).rho_ab.imag(), upper = nearest(t, 10).rho_ab.imag();
    const auto [lo, hi] = std::minmax_element(t.records.begin(), t.records.end(), [](const auto& x, const auto& y) {
        return x.rho_ab.imag() < y.rho_ab.imag();
    });
    const bool signs = lower > 0 && upper < 0;
    const bool magnitudes = std::abs(lower - 0.37) <= 0.15 * 0.37 && std::abs(upper + 0.37) <= 0.15 * 0.37;
    const bool located = std::abs(hi->delta_p + 10) <= g.step() + 1e-12 && std::abs(lo->delta_p - 10) <= g.step() + 1e-12;
    return {signs && magnitudes && located,
            fmt("Im rho_ab(-10)=%+.5f, Im rho_ab(+10)=%+.5f (targets +/-0.37 within 15%%: %s); argmax %.2f, argmin %.2f "
                "(within %.2f of -/+10: %s)",
                lower, upper, magnitudes ? "yes" : "no", hi->delta_p, lo->delta_p, g.step(), located ? "yes" : "no")};
}

Verdict phase_control() {
    const Grid1D g = default_detuning_grid();
    const auto in_phase = sweep_detuning(fig3(0), g);
    const auto out_phase = sweep_detuning(fig3(pi), g);
    const auto quadrature = sweep_detuning(fig3(pi / 2), g);

    double max_mirror = 0.0, extremum = 0.0;
    for (std::size_t k = 0; k < g.points; ++k) {
        max_mirror = std::max(max_mirror, std::abs(in_phase.records[k].rho_ab.imag() + out_phase.records[k].rho_ab.imag()));
        extremum = std::max(extremum, std::abs(in_phase.records[k].rho_ab.imag()));
    }
    const bool swapped = nearest(out_phase, -10).rho_ab.imag() < 0 && nearest(out_phase, 10).rho_ab.imag() > 0 &&
                         max_mirror <= 1e-12 * extremum;
    const double q_lower = std::abs(nearest(quadrature, -10).rho_ab.imag());
    const double q_upper = std::abs(nearest(quadrature, 10).rho_ab.imag());
    const bool dispersive = std::max(q_lower, q_upper) <= 0.05 * extremum;
    return {swapped && dispersive,
            fmt("dphi=pi: Im rho_ab(-10)=%+.5f, Im rho_ab(+10)=%+.5f, max|Im(0)+Im(pi)|=%.1e; dphi=pi/2: "
                "|Im| at -/+10 = %.5f, %.5f (<= %.5f)",
                nearest(out_phase, -10).rho_ab.imag(), nearest(out_phase, 10).rho_ab.imag(), max_mirror, q_lower,
                q_upper, 0.05 * extremum)};
}

Verdict sideband_symmetry() {
    const Grid1D g = default_detuning_grid();
    const auto t = sweep_detuning(fig3(), g);
    double im_err = 0.0, re_err = 0.0;
    for (std::size_t k = 0; k < g.points; ++k) {
        const auto& r = t.records[k];
        const auto& m = t.records[g.points - 1 - k];
        im_err = std::max(im_err, std::abs(r.rho_ab.imag() + m.rho_ab.imag()));
        re_err = std::max(re_err, std::abs(r.rho_ab.real() - m.rho_ab.real()));
    }
    return {im_err <= 1e-3 && re_err <= 1e-3,
            fmt("max|Im(dp)+Im(-dp)|=%.2e, max|Re(dp)-Re(-dp)|=%.2e (<=1e-3)", im_err, re_err)};
}

Verdict oracle_equivalence() {
    SystemParams p = fig3();
    p.omega_p = 1e-2;
    const double bound = 5.0 * (p.omega_p / p.omega_l) * (p.omega_p / p.omega_l);
    const auto t = sweep_detuning(p, default_detuning_grid());
    double err_ab = 0.0, err_ac = 0.0, at_ab = 0.0, at_ac = 0.0;
    for (const auto& r : t.records) {
        SystemParams q = p;
        q.delta_p = r.delta_p;
        const double eab = std::abs(r.rho_ab - analytic::rho_ab_weak(q));
        const double eac = std::abs(r.rho_ac - analytic::rho_ac_weak(q));
        if (eab > err_ab) err_ab = eab, at_ab = r.delta_p;
        if (eac > err_ac) err_ac = eac, at_ac = r.delta_p;
    }
    return {err_ab <= bound && err_ac <= bound,
            fmt("max|rho_ab - weak-probe formula|=%.2e at dp=%.1f, max|rho_ac - weak-probe formula|=%.2e at dp=%.1f "
                "(bound %.1e)",
                err_ab, at_ab, err_ac, at_ac, bound)};
}

Verdict long_time() {
    const SystemParams p = fig5(-10);
    const auto traj = evolve(p, pure_state(Level::a), TimeGrid::covering(50.0, 0.05), kTol);
    const double dist = (traj.states.back() - steady_state(build_liouvillian(p)).rho).norm();
    return {dist <= 1e-6, fmt("||rho(t=%.2f) - rho_ss|| = %.2e (<=1e-6)", traj.times.back(), dist)};
}

Spectrum default_spectrum(double delta_p, double t_final = 102.35) {
    const auto traj = evolve(fig5(delta_p), pure_state(Level::a), TimeGrid::covering(t_final, 0.05), kTol);
    return spectrum(traj);
}

Verdict spectrum_peaks() {
    const Spectrum a = default_spectrum(-20);
    const double tallest_a = *std::max_element(a.amplitude.begin(), a.amplitude.end());
    const auto peaks_a = find_peaks(a, 1e-3 * tallest_a);
    std::string found;
    bool all_found = true;
    for (double target : {-20.0, -10.0, 10.0}) {
        double best = INFINITY;
        for (const auto& pk : peaks_a) best = std::min(best, std::abs(pk.nu_center - target));
        all_found = all_found && best <= a.resolution;
        found += fmt(" %.0f:%.3f", target, best);
    }

    const Spectrum c = default_spectrum(-10);
    const auto peaks_c = find_peaks(c, 0.0);
    const bool dominant_at = !peaks_c.empty() && std::abs(peaks_c[0].nu_center + 10) <= c.resolution;
    const double ratio = peaks_c.size() > 1 ? peaks_c[0].height / peaks_c[1].height : INFINITY;
    return {all_found && dominant_at && ratio >= 10,
            fmt("fig5a distance to nearest peak (bin %.4f):%s; fig5c top peak at %.3f, %.1fx the next local maximum",
                a.resolution, found.c_str(), peaks_c.empty() ? NAN : peaks_c[0].nu_center, ratio)};
}

Verdict linewidth() {
    auto sharp = [](const Spectrum& s) {
        const auto peaks = find_peaks(s, 0.0);
        return peaks.front();
    };
    const Spectrum short_window = default_spectrum(-10, 102.35);
    const Spectrum long_window = default_spectrum(-10, 204.75);
    const Peak p1 = sharp(short_window), p2 = sharp(long_window);
    const double ratio = p1.fwhm / p2.fwhm;
    return {std::abs(ratio - 2.0) <= 0.25 * 2.0,
            fmt("FWHM %.4f (T=%.2f, bin %.4f) -> %.4f (T=%.2f, bin %.4f), ratio %.3f (2 +/- 25%%)", p1.fwhm,
                102.35, short_window.resolution, p2.fwhm, 204.75,
                long_window.resolution, ratio)};
}

Verdict flat_top() {
    SystemParams p = fig3(-pi / 2);
    p.omega_p = kStrongProbeOmega;
    const auto t = sweep_detuning(p, default_detuning_grid());
    double best = 0.0, from = 0.0, to = 0.0;
    std::optional<double> begin;
    for (const auto& r : t.records) {
        if (r.rho_ab.imag() > 0) {
            if (!begin) begin = r.delta_p;
            if (r.delta_p - *begin > best) best = r.delta_p - *begin, from = *begin, to = r.delta_p;
        }
        else begin.reset();
    }
    return {best >= 10.0, fmt("Im rho_ab > 0 on [%.1f, %.1f], width %.1f (>=10)", from, to, best)};
}

bool physical(const Matrix3& rho, double tol_herm, double tol_trace, double tol_eig) {
    const auto ph = physicality(rho);
    return ph.hermiticity_error <= tol_herm && ph.trace_error <= tol_trace && ph.min_eigenvalue >= -tol_eig;
}

std::string csv(const ScanTable& t) {
    std::ostringstream out;
    write_csv(t, out);
    return out.str();
}

Verdict physicality_suite() {
    std::size_t states = 0, bad_states = 0, bad_residual = 0, failed = 0;
    double worst_residual = 0.0;

    auto check_table = [&](const ScanTable& t) {
        for (const auto& r : t.records) {
            if (!r.ok()) {
                ++failed;
                continue;
            }
            SystemParams q = t.params;
            q.delta_p = r.delta_p;
            if (t.is_map()) q.phi_p = t.params.phi_l + r.delta_phi;
            const auto ss = steady_state(build_liouvillian(q));
            ++states;
            if (!physical(ss.rho, 1e-12, 1e-12, 1e-10)) ++bad_states;
            worst_residual = std::max(worst_residual, r.residual);
            if (r.residual > 1e-10) ++bad_residual;
        }
    };

    SystemParams strong = fig3();
    strong.omega_p = kStrongProbeOmega;
    const Grid1D gdp{-20, 20, 81}, gphi{0, 2 * pi, 25};
    check_table(map_phase_detuning(fig3(), gdp, gphi, {1}));
    check_table(map_phase_detuning(strong, gdp, gphi, {1}));
    SystemParams weak = fig3();
    weak.omega_p = 1e-2;
    check_table(sweep_detuning(weak, default_detuning_grid(), {1}));

    std::size_t bad_samples = 0, samples = 0;
    for (double dp : {-20.0, -15.0, -10.0, 0.0}) {
        const auto traj = evolve(fig5(dp), pure_state(Level::a), TimeGrid::covering(102.35, 0.05), kTol);
        for (const auto& rho : traj.states) {
            ++samples;
            if (!physical(rho, 1e-12, 1e-12, 1e-10)) ++bad_samples;
        }
    }

    bool deterministic = true;
    for (const SystemParams& p : {fig3(), strong}) {
        const std::string serial = csv(map_phase_detuning(p, gdp, gphi, {1}));
        for (std::size_t workers : {2u, 4u, 8u})
            deterministic = deterministic && csv(map_phase_detuning(p, gdp, gphi, {workers})) == serial;
    }

    const bool pass = bad_states == 0 && bad_residual == 0 && failed == 0 && bad_samples == 0 && deterministic;
    return {pass, fmt("steady states %zu (nonphysical %zu, failed %zu, max residual %.1e); trajectory samples %zu "
                      "(nonphysical %zu); CSV identical for 1/2/4/8 workers: %s",
                      states, bad_states, failed, worst_residual, samples, bad_samples, deterministic ? "yes" : "no")};
}

struct Criterion {
    const char* name;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {"EIT at bare two-photon resonance", eit_resonance},
        {"dressed-resonance gain and absorption", dressed_gain_absorption},
        {"phase control", phase_control},
        {"sideband antisymmetry", sideband_symmetry},
        {"weak-probe formula agreement", oracle_equivalence},
        {"long-time approach to the steady state", long_time},
        {"spectrum peaks", spectrum_peaks},
        {"resolution-limited linewidth", linewidth},
        {"strong-probe flat-top gain", flat_top},
        {"physicality and determinism", physicality_suite},
    };

    std::size_t first = 1, last = criteria.size();
    if (argc > 1) {
        first = last = std::strtoul(argv[1], nullptr, 10);
        if (first < 1 || first > criteria.size()) {
            std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
            return 2;
        }
    }

    int failures = 0;
    for (std::size_t k = first; k <= last; ++k) {
        Verdict v;
        try {
            v = criteria[k - 1].run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] C%zu %s: %s\n", v.pass ? "PASS" : "FAIL", k, criteria[k - 1].name, v.detail.c_str());
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
