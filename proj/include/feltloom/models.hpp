#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace feltloom {

// --- Needles ------------------------------------------------------------

enum class NeedleTip { triangle, star, spiral };
enum class NeedleGauge { thin, thick };

struct NeedleSpec {
    NeedleTip tip = NeedleTip::triangle;
    NeedleGauge gauge = NeedleGauge::thick;

    // Stable index 0..5 in (triangle, star, spiral) x (thin, thick) order.
    int index() const { return static_cast<int>(tip) * 2 + static_cast<int>(gauge); }
    bool operator==(const NeedleSpec&) const = default;
};

std::string needle_name(NeedleSpec needle);
NeedleSpec needle_from_name(const std::string& name);  // e.g. "triangle_thick"

// --- Density ------------------------------------------------------------

// Saturating compression curve d(n) = d_max - (d_max - d0) * exp(-n / tau),
// in g/cm^3 over punch count n.
struct DensityCurve {
    double d0 = 0.075;
    double d_max = 0.225;
    double tau = 350.0;  // punches

    void validate() const;
};

// Per-needle curves sharing the loose-wool initial density.
struct DensityModel {
    double d0 = 0.075;
    std::array<double, 6> d_max{};  // indexed by NeedleSpec::index()
    std::array<double, 6> tau{};

    static DensityModel defaults();
    DensityCurve curve(NeedleSpec needle) const;
    void validate() const;
};

double density_after(double punches, const DensityCurve& curve);

// Minimal punch count n with density_after(n) >= target. Returns 0 for
// target < d0; throws Error when target >= d_max.
long punches_for_density(double target, const DensityCurve& curve);

// --- Strength -----------------------------------------------------------

struct StrengthTable {
    std::array<double, 6> max_tensile_n{};      // by NeedleSpec::index()
    std::array<double, 6> max_compressive_n{};  // by NeedleSpec::index()
    // Tensile at 50 mm stretch per supported crossed-coiling ratio (%).
    std::map<int, double> ratio_tensile_at_50mm;
    // Stretch at peak tensile where measured (mm), by needle index.
    std::array<std::optional<double>, 6> tensile_peak_stretch_mm{};

    static StrengthTable defaults();
    void validate() const;
};

std::pair<double, double> needle_strength(NeedleSpec needle, const StrengthTable& table);

// Tensile force of a coiled (unfelted) structure at the given crossed
// ratio and stretch; linear in stretch from 0 N at 0 mm to the table
// anchor at 50 mm. Throws Error for unsupported ratios.
double ratio_tensile(int ratio_pct, double stretch_mm, const StrengthTable& table);

// --- Materials ----------------------------------------------------------

struct MaterialSpec {
    std::string name = "wool";
    int entangle_rank = 1;       // 1 best
    double compressibility = 1.0;  // 0..1
    double linear_density_g_per_m = 0.5;
    double felt_fix_multiplier = 1.0;  // extra punches to fixate vs wool

    void validate() const;
};

struct MaterialLibrary {
    std::vector<MaterialSpec> materials;

    static MaterialLibrary defaults();
    const MaterialSpec& get(const std::string& name) const;  // throws if unknown
    bool has(const std::string& name) const;
};

// --- Time ---------------------------------------------------------------

struct TimeModel {
    double sec_per_horizontal_cycle = 1.6;
    double sec_per_crossed_cycle = 2.4;
    double sec_per_punch = 0.25;
    double sec_per_reposition = 1.2;
    double system_overhead_base = 10.0;
    double sec_per_command = 0.02;

    void validate() const;
};

// Plan size summary used for time accounting; the simulator reconstructs
// the same numbers from an emitted program.
struct PlanCounts {
    double horizontal_cycles = 0.0;  // fractional: embroidery stacks count partial cycles
    double crossed_cycles = 0.0;
    long punches = 0;
    long repositions = 0;  // felting stations visited
    long commands = 0;     // emitted instruction count

    PlanCounts& operator+=(const PlanCounts& o);
};

struct PlanTimes {
    double coil_s = 0.0;
    double felt_s = 0.0;
    double system_s = 0.0;

    double total() const { return coil_s + felt_s + system_s; }
};

PlanTimes estimate_time(const PlanCounts& counts, const TimeModel& model);

struct TimeObservation {
    PlanCounts counts;
    double coil_s = 0.0;
    double felt_s = 0.0;
    double system_s = 0.0;
};

// Nonnegative least squares over relative errors, fit independently per
// time component (2 coefficients each). Deterministic given input order;
// throws CalibrationError naming unresolvable coefficients.
TimeModel calibrate_time_model(std::span<const TimeObservation> observations);

// --- Tension ------------------------------------------------------------

enum class TensionLevel { none, low, high };

std::string tension_name(TensionLevel level);
TensionLevel tension_from_name(const std::string& name);

struct TensionParams {
    double nominal_force_n = 0.05;
    double jitter_sigma_mm = 0.5;  // radial deposition noise
    double slack_factor = 1.02;    // feed surplus vs taut length
};

struct TensionModel {
    TensionParams none{0.0, 1.2, 1.10};
    TensionParams low{0.05, 0.5, 1.02};
    TensionParams high{0.1, 0.15, 1.00};

    const TensionParams& of(TensionLevel level) const;
    void validate() const;
};

// --- Bundle -------------------------------------------------------------

struct ProcessModels {
    DensityModel density;
    StrengthTable strength;
    TensionModel tension;
    TimeModel time;
    MaterialLibrary materials;

    static ProcessModels defaults();
    void validate() const;
};

}  // namespace feltloom
