#include "feltloom/models.hpp"

#include <algorithm>
#include <cmath>

#include "feltloom/errors.hpp"

namespace feltloom {

// --- Needles ------------------------------------------------------------

std::string needle_name(NeedleSpec needle) {
    static const char* tips[] = {"triangle", "star", "spiral"};
    static const char* gauges[] = {"thin", "thick"};
    return std::string(tips[static_cast<int>(needle.tip)]) + "_" +
           gauges[static_cast<int>(needle.gauge)];
}

NeedleSpec needle_from_name(const std::string& name) {
    for (NeedleTip tip : {NeedleTip::triangle, NeedleTip::star, NeedleTip::spiral})
        for (NeedleGauge gauge : {NeedleGauge::thin, NeedleGauge::thick}) {
            NeedleSpec spec{tip, gauge};
            if (needle_name(spec) == name) return spec;
        }
    throw Error("unknown needle: " + name);
}

// --- Density ------------------------------------------------------------

void DensityCurve::validate() const {
    if (!(d_max > d0) || !(d0 > 0.0)) throw Error("density curve: requires d_max > d0 > 0");
    if (!(tau > 0.0)) throw Error("density curve: tau must be positive");
}

DensityModel DensityModel::defaults() {
    DensityModel m;
    m.d0 = 0.075;
    auto set = [&m](NeedleTip tip, NeedleGauge gauge, double d_max, double tau) {
        const int i = NeedleSpec{tip, gauge}.index();
        m.d_max[static_cast<std::size_t>(i)] = d_max;
        m.tau[static_cast<std::size_t>(i)] = tau;
    };
    set(NeedleTip::triangle, NeedleGauge::thick, 0.225, 350.0);
    set(NeedleTip::triangle, NeedleGauge::thin, 0.180, 550.0);
    set(NeedleTip::star, NeedleGauge::thick, 0.225, 420.0);
    set(NeedleTip::star, NeedleGauge::thin, 0.180, 650.0);
    set(NeedleTip::spiral, NeedleGauge::thick, 0.225, 420.0);
    set(NeedleTip::spiral, NeedleGauge::thin, 0.180, 620.0);
    return m;
}

DensityCurve DensityModel::curve(NeedleSpec needle) const {
    const auto i = static_cast<std::size_t>(needle.index());
    return DensityCurve{d0, d_max[i], tau[i]};
}

void DensityModel::validate() const {
    for (NeedleTip tip : {NeedleTip::triangle, NeedleTip::star, NeedleTip::spiral}) {
        const DensityCurve thick = curve({tip, NeedleGauge::thick});
        const DensityCurve thin = curve({tip, NeedleGauge::thin});
        thick.validate();
        thin.validate();
        if (!(thick.tau < thin.tau))
            throw Error("density model: thick needles must saturate faster than thin");
    }
}

double density_after(double punches, const DensityCurve& curve) {
    if (punches < 0) throw Error("density_after: negative punch count");
    return curve.d_max - (curve.d_max - curve.d0) * std::exp(-punches / curve.tau);
}

long punches_for_density(double target, const DensityCurve& curve) {
    curve.validate();
    if (target < curve.d0) return 0;
    if (target >= curve.d_max)
        throw Error("density target " + std::to_string(target) + " unreachable (saturates at " +
                    std::to_string(curve.d_max) + ")");
    const double exact = -curve.tau * std::log((curve.d_max - target) / (curve.d_max - curve.d0));
    // ceil with a nudge so targets that land exactly on an integer stay there
    long n = static_cast<long>(std::ceil(exact - 1e-9));
    if (n < 0) n = 0;
    return n;
}

// --- Strength -----------------------------------------------------------

StrengthTable StrengthTable::defaults() {
    StrengthTable t;
    auto set = [&t](NeedleTip tip, NeedleGauge gauge, double tensile, double compressive) {
        const auto i = static_cast<std::size_t>(NeedleSpec{tip, gauge}.index());
        t.max_tensile_n[i] = tensile;
        t.max_compressive_n[i] = compressive;
    };
    // Measured maxima per needle, N.
    set(NeedleTip::triangle, NeedleGauge::thin, 95.38, 2.38);
    set(NeedleTip::triangle, NeedleGauge::thick, 122.46, 8.82);
    set(NeedleTip::star, NeedleGauge::thin, 89.78, 1.12);
    set(NeedleTip::star, NeedleGauge::thick, 107.86, 4.32);
    set(NeedleTip::spiral, NeedleGauge::thin, 92.04, 1.88);
    set(NeedleTip::spiral, NeedleGauge::thick, 107.04, 2.44);

    // Coiled-structure tensile at 50 mm stretch per crossed ratio. The 100%
    // value is measured; 50% performs nearly as well, the quarter mixes
    // about half of that, and pure horizontal coils unravel below 1 N.
    t.ratio_tensile_at_50mm = {{0, 0.9}, {25, 20.0}, {50, 40.0}, {75, 20.0}, {100, 44.6}};

    t.tensile_peak_stretch_mm[static_cast<std::size_t>(
        NeedleSpec{NeedleTip::star, NeedleGauge::thick}.index())] = 13.2;
    t.tensile_peak_stretch_mm[static_cast<std::size_t>(
        NeedleSpec{NeedleTip::spiral, NeedleGauge::thick}.index())] = 14.25;
    return t;
}

void StrengthTable::validate() const {
    for (NeedleTip tip : {NeedleTip::triangle, NeedleTip::star, NeedleTip::spiral}) {
        const auto thick = static_cast<std::size_t>(NeedleSpec{tip, NeedleGauge::thick}.index());
        const auto thin = static_cast<std::size_t>(NeedleSpec{tip, NeedleGauge::thin}.index());
        if (!(max_tensile_n[thick] > max_tensile_n[thin]))
            throw Error("strength table: thick must out-pull thin for every tip");
    }
    const auto need = {0, 25, 50, 75, 100};
    for (int r : need)
        if (!ratio_tensile_at_50mm.count(r))
            throw Error("strength table: missing ratio anchor " + std::to_string(r));
    const auto& m = ratio_tensile_at_50mm;
    const double strong = std::min(m.at(100), m.at(50));
    const double mid = std::max(m.at(75), m.at(25));
    if (!(strong > mid) || !(mid > m.at(0)))
        throw Error("strength table: ratio anchors must order {100,50} > {75,25} > {0}");
    if (!(m.at(0) < 1.0)) throw Error("strength table: 0% anchor must stay below 1 N");
}

std::pair<double, double> needle_strength(NeedleSpec needle, const StrengthTable& table) {
    const auto i = static_cast<std::size_t>(needle.index());
    return {table.max_tensile_n[i], table.max_compressive_n[i]};
}

double ratio_tensile(int ratio_pct, double stretch_mm, const StrengthTable& table) {
    auto it = table.ratio_tensile_at_50mm.find(ratio_pct);
    if (it == table.ratio_tensile_at_50mm.end()) {
        std::string supported;
        for (const auto& [r, _] : table.ratio_tensile_at_50mm)
            supported += (supported.empty() ? "" : ", ") + std::to_string(r);
        throw Error("unsupported crossed ratio " + std::to_string(ratio_pct) +
                    "% (supported: " + supported + ")");
    }
    if (stretch_mm < 0.0 || stretch_mm > 50.0)
        throw Error("ratio_tensile: stretch must lie in [0, 50] mm");
    return it->second * (stretch_mm / 50.0);
}

// --- Materials ----------------------------------------------------------

void MaterialSpec::validate() const {
    if (entangle_rank < 1 || entangle_rank > 4) throw Error("material: entangle_rank must be 1..4");
    if (compressibility < 0.0 || compressibility > 1.0)
        throw Error("material: compressibility must be 0..1");
    if (!(linear_density_g_per_m > 0.0)) throw Error("material: linear density must be positive");
    if (!(felt_fix_multiplier >= 1.0)) throw Error("material: felt_fix_multiplier must be >= 1");
}

MaterialLibrary MaterialLibrary::defaults() {
    MaterialLibrary lib;
    lib.materials = {
        {"wool", 1, 1.00, 0.5, 1.0},
        {"acrylic", 2, 0.70, 0.45, 1.5},
        {"hemp", 3, 0.35, 0.8, 2.0},
        {"ribbon", 4, 0.15, 0.6, 3.0},
    };
    return lib;
}

const MaterialSpec& MaterialLibrary::get(const std::string& name) const {
    for (const auto& m : materials)
        if (m.name == name) return m;
    throw Error("unknown material: " + name);
}

bool MaterialLibrary::has(const std::string& name) const {
    return std::any_of(materials.begin(), materials.end(),
                       [&name](const MaterialSpec& m) { return m.name == name; });
}

// --- Time ---------------------------------------------------------------

void TimeModel::validate() const {
    const double all[] = {sec_per_horizontal_cycle, sec_per_crossed_cycle, sec_per_punch,
                          sec_per_reposition,       system_overhead_base,  sec_per_command};
    for (double v : all)
        if (!(v >= 0.0)) throw Error("time model: coefficients must be nonnegative");
    if (!(sec_per_crossed_cycle >= sec_per_horizontal_cycle))
        throw Error("time model: crossed cycles cannot be cheaper than horizontal");
}

PlanCounts& PlanCounts::operator+=(const PlanCounts& o) {
    horizontal_cycles += o.horizontal_cycles;
    crossed_cycles += o.crossed_cycles;
    punches += o.punches;
    repositions += o.repositions;
    commands += o.commands;
    return *this;
}

PlanTimes estimate_time(const PlanCounts& counts, const TimeModel& model) {
    PlanTimes t;
    t.coil_s = counts.horizontal_cycles * model.sec_per_horizontal_cycle +
               counts.crossed_cycles * model.sec_per_crossed_cycle;
    t.felt_s = static_cast<double>(counts.punches) * model.sec_per_punch +
               static_cast<double>(counts.repositions) * model.sec_per_reposition;
    t.system_s = model.system_overhead_base +
                 static_cast<double>(counts.commands) * model.sec_per_command;
    return t;
}

namespace {

// Least squares of y ~ a*u + b*v with a, b >= 0, minimizing relative error
// (each row scaled by 1/y). Two unknowns, so the active-set walk is tiny.
struct Fit2 {
    double a = 0.0, b = 0.0;
    bool a_resolved = true, b_resolved = true;
};

Fit2 fit_two_nonneg(const std::vector<double>& u, const std::vector<double>& v,
                    const std::vector<double>& y) {
    const std::size_t n = y.size();
    double suu = 0, svv = 0, suv = 0, suy = 0, svy = 0;
    double u_seen = 0, v_seen = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 1.0 / y[i];
        const double ui = u[i] * w, vi = v[i] * w;
        suu += ui * ui;
        svv += vi * vi;
        suv += ui * vi;
        suy += ui;  // y[i] * w == 1
        svy += vi;
        u_seen += std::abs(u[i]);
        v_seen += std::abs(v[i]);
    }

    Fit2 fit;
    fit.a_resolved = u_seen > 0.0;
    fit.b_resolved = v_seen > 0.0;
    if (!fit.a_resolved && !fit.b_resolved) return fit;
    if (!fit.a_resolved) {
        fit.b = std::max(0.0, svy / svv);
        return fit;
    }
    if (!fit.b_resolved) {
        fit.a = std::max(0.0, suy / suu);
        return fit;
    }

    const double det = suu * svv - suv * suv;
    if (std::abs(det) > 1e-12 * std::max(1.0, suu * svv)) {
        fit.a = (suy * svv - svy * suv) / det;
        fit.b = (svy * suu - suy * suv) / det;
        if (fit.a >= 0.0 && fit.b >= 0.0) return fit;
    } else {
        // u and v are collinear across the observations: the split between
        // the two coefficients is not identifiable.
        fit.a_resolved = fit.b_resolved = false;
        return fit;
    }
    // Clamp the negative coefficient to zero and refit the other.
    const double a_only = std::max(0.0, suy / suu);
    const double b_only = std::max(0.0, svy / svv);
    auto sse = [&](double a, double b) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = (a * u[i] + b * v[i] - y[i]) / y[i];
            s += r * r;
        }
        return s;
    };
    if (sse(a_only, 0.0) <= sse(0.0, b_only)) {
        fit.a = a_only;
        fit.b = 0.0;
    } else {
        fit.a = 0.0;
        fit.b = b_only;
    }
    return fit;
}

}  // namespace

TimeModel calibrate_time_model(std::span<const TimeObservation> observations) {
    if (observations.size() < 2)
        throw CalibrationError("calibration needs at least 2 observations",
                               {"sec_per_horizontal_cycle", "sec_per_crossed_cycle",
                                "sec_per_punch", "sec_per_reposition", "system_overhead_base",
                                "sec_per_command"});
    std::vector<double> hc, xc, coil, punches, repos, felt, ones, cmds, system;
    for (const auto& o : observations) {
        if (!(o.coil_s > 0.0) || !(o.felt_s > 0.0) || !(o.system_s > 0.0))
            throw CalibrationError("calibration requires positive measured times", {});
        hc.push_back(o.counts.horizontal_cycles);
        xc.push_back(o.counts.crossed_cycles);
        coil.push_back(o.coil_s);
        punches.push_back(static_cast<double>(o.counts.punches));
        repos.push_back(static_cast<double>(o.counts.repositions));
        felt.push_back(o.felt_s);
        ones.push_back(1.0);
        cmds.push_back(static_cast<double>(o.counts.commands));
        system.push_back(o.system_s);
    }

    const Fit2 coil_fit = fit_two_nonneg(hc, xc, coil);
    const Fit2 felt_fit = fit_two_nonneg(punches, repos, felt);
    const Fit2 system_fit = fit_two_nonneg(ones, cmds, system);

    std::vector<std::string> unresolved;
    if (!coil_fit.a_resolved) unresolved.push_back("sec_per_horizontal_cycle");
    if (!coil_fit.b_resolved) unresolved.push_back("sec_per_crossed_cycle");
    if (!felt_fit.a_resolved) unresolved.push_back("sec_per_punch");
    if (!felt_fit.b_resolved) unresolved.push_back("sec_per_reposition");
    if (!system_fit.a_resolved) unresolved.push_back("system_overhead_base");
    if (!system_fit.b_resolved) unresolved.push_back("sec_per_command");
    if (!unresolved.empty()) {
        std::string names;
        for (const auto& n : unresolved) names += (names.empty() ? "" : ", ") + n;
        throw CalibrationError("calibration cannot resolve: " + names, std::move(unresolved));
    }

    TimeModel model;
    model.sec_per_horizontal_cycle = coil_fit.a;
    model.sec_per_crossed_cycle = std::max(coil_fit.b, coil_fit.a);
    model.sec_per_punch = felt_fit.a;
    model.sec_per_reposition = felt_fit.b;
    model.system_overhead_base = system_fit.a;
    model.sec_per_command = system_fit.b;
    model.validate();
    return model;
}

// --- Tension ------------------------------------------------------------

std::string tension_name(TensionLevel level) {
    switch (level) {
        case TensionLevel::none: return "none";
        case TensionLevel::low: return "low";
        case TensionLevel::high: return "high";
    }
    return "low";
}

TensionLevel tension_from_name(const std::string& name) {
    if (name == "none") return TensionLevel::none;
    if (name == "low") return TensionLevel::low;
    if (name == "high") return TensionLevel::high;
    throw Error("unknown tension level: " + name);
}

const TensionParams& TensionModel::of(TensionLevel level) const {
    switch (level) {
        case TensionLevel::none: return none;
        case TensionLevel::low: return low;
        case TensionLevel::high: return high;
    }
    return low;
}

void TensionModel::validate() const {
    if (!(none.nominal_force_n == 0.0))
        throw Error("tension: 'none' must carry zero force");
    if (!(none.nominal_force_n < low.nominal_force_n && low.nominal_force_n < high.nominal_force_n))
        throw Error("tension: forces must increase none < low < high");
    if (!(high.nominal_force_n == 0.1))
        throw Error("tension: 'high' is defined as the 0.1 N operating point");
    if (!(none.jitter_sigma_mm > low.jitter_sigma_mm && low.jitter_sigma_mm > high.jitter_sigma_mm))
        throw Error("tension: jitter must decrease with tension");
    if (!(none.slack_factor > low.slack_factor && low.slack_factor >= high.slack_factor) ||
        !(high.slack_factor >= 1.0))
        throw Error("tension: slack must decrease with tension and stay >= 1");
}

// --- Bundle -------------------------------------------------------------

ProcessModels ProcessModels::defaults() {
    ProcessModels m;
    m.density = DensityModel::defaults();
    m.strength = StrengthTable::defaults();
    m.materials = MaterialLibrary::defaults();
    return m;
}

void ProcessModels::validate() const {
    density.validate();
    strength.validate();
    tension.validate();
    time.validate();
    for (const auto& mat : materials.materials) mat.validate();
    // Material ordering: wool entangles best, ribbon worst.
    if (materials.has("wool") && materials.has("acrylic") && materials.has("hemp") &&
        materials.has("ribbon")) {
        if (!(materials.get("wool").entangle_rank < materials.get("acrylic").entangle_rank &&
              materials.get("acrylic").entangle_rank < materials.get("hemp").entangle_rank &&
              materials.get("hemp").entangle_rank < materials.get("ribbon").entangle_rank))
            throw Error("materials: entanglement must order wool < acrylic < hemp < ribbon");
    }
}

}  // namespace feltloom
