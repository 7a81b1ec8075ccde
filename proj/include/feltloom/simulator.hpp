#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feltloom/machine_program.hpp"
#include "feltloom/models.hpp"
#include "feltloom/rng.hpp"

namespace feltloom {

struct SimResolution {
    double dr = 1.0;   // mm
    int n_theta = 24;
    double dz = 1.0;   // mm
};

struct SimParams {
    SimResolution resolution;
    NeedleSpec needle{NeedleTip::triangle, NeedleGauge::thick};
    FeltConfig felt;
    CoreSpec core;
    double volume_threshold_frac = 0.5;  // occupied iff density >= frac * d0
};

// Cylindrical voxel field of yarn mass (grams) over the work envelope.
// Cells are annular sectors; nothing may sit inside the core radius.
class DensityField {
  public:
    DensityField(const WorkEnvelope& env, const SimResolution& res, double core_radius);

    std::size_t nr() const { return nr_; }
    std::size_t ntheta() const { return nt_; }
    std::size_t nz() const { return nz_; }
    double core_radius() const { return core_radius_; }

    double cell_volume_mm3(std::size_t ri) const;
    double mass(std::size_t ri, std::size_t ti, std::size_t zi) const;
    double& mass(std::size_t ri, std::size_t ti, std::size_t zi);
    double density(std::size_t ri, std::size_t ti, std::size_t zi) const;  // g/cm^3

    long column_punches(std::size_t ti, std::size_t zi) const;
    long& column_punches(std::size_t ti, std::size_t zi);

    double total_mass() const;
    std::size_t radial_index(double r) const;    // clamped
    std::size_t theta_index(double theta_rad) const;
    std::size_t z_index(double z) const;         // clamped
    double radial_center(std::size_t ri) const;
    double z_center(std::size_t zi) const;
    double theta_center(std::size_t ti) const;
    bool inside(double r, double z) const;

    // Outer surface radius of the (theta, z) column, or core radius if empty.
    double surface_radius(std::size_t ti, std::size_t zi, double density_threshold) const;

    // Envelope radius per slab (max over theta of column surfaces).
    RadialProfile profile(double density_threshold) const;

    const WorkEnvelope& envelope() const { return env_; }

  private:
    WorkEnvelope env_;
    SimResolution res_;
    double core_radius_;
    std::size_t nr_, nt_, nz_;
    std::vector<double> mass_;
    std::vector<long> punches_;
};

struct SimReport {
    double total_mass_g = 0.0;
    double volume_cm3 = 0.0;
    double mean_density = 0.0;  // over occupied cells, g/cm^3
    double max_density = 0.0;
    RadialProfile final_profile;
    double tensile_n = 0.0;
    double compressive_n = 0.0;
    PlanTimes times;
    PlanCounts counts;
    std::uint64_t seed = 0;

    std::string to_text() const;  // line-oriented report
};

// Region of the field for strength queries (inclusive cell index ranges).
struct FieldRegion {
    std::size_t r0 = 0, r1 = SIZE_MAX;
    std::size_t t0 = 0, t1 = SIZE_MAX;
    std::size_t z0 = 0, z1 = SIZE_MAX;
};

// Adds lambda * path_length of yarn along one coil pass, radially jittered
// by the tension's sigma. Total deposited mass is exactly
// pass.cycles * lambda * pass.path_length_per_cycle().
void deposit_coil(DensityField& field, const CoilPass& pass, const MaterialSpec& material,
                  const TensionParams& tension, SplitMix64& rng);

// Compresses the punch footprint columns around `target` so their density
// follows the cumulative-punch curve. Mass is conserved exactly; throws
// Error when the needle would strike the rigid core stick.
void apply_felt(DensityField& field, const Vec3& target, const Vec3& approach, long punches,
                const DensityCurve& curve, const FeltConfig& cfg);

// (tensile, compressive) prediction for a region: needle table lookups
// scaled by mean density / d_max for felted regions; coil-ratio table
// (capped below 1 N compressive) for unfelted ones.
std::pair<double, double> predicted_strength(const DensityField& field, const FieldRegion& region,
                                             const ProcessModels& models, NeedleSpec needle,
                                             int crossed_ratio_pct);

// Executes the program against a fresh field. Deterministic for fixed
// (program, material, models, params, seed).
SimReport simulate(const MachineProgram& program, const MaterialSpec& material,
                   const ProcessModels& models, const SimParams& params, std::uint64_t seed,
                   const StewartGeometry& geom);

// Dense dump, one "z r theta mass" row per nonempty cell.
std::string dump_density(const DensityField& field);

}  // namespace feltloom
