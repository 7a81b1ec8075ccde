#pragma once

#include <string>
#include <vector>

#include "feltloom/coil.hpp"
#include "feltloom/feltplan.hpp"
#include "feltloom/mesh.hpp"
#include "feltloom/models.hpp"
#include "feltloom/profile.hpp"

namespace feltloom {

enum class TransformMethod { regular, fit, embroidered };

std::string method_name(TransformMethod method);
TransformMethod method_from_name(const std::string& name);

// Detachable mandrel the workpiece forms on: rigid stick inside a soft
// cushion whose outer radius is core_radius.
struct CoreSpec {
    double core_radius = 4.0;
    double core_length = 75.0;
    bool detachable = true;
};

// Brief felting to pin down loose coils while the shape builds up.
struct FixationPolicy {
    int every_layers = 2;
    int stations = 8;
    long punches_per_station = 10;
};

struct PlanParams {
    double line_width = 2.0;
    int crossed_ratio_pct = 50;
    TensionLevel tension = TensionLevel::low;
    std::string material = "wool";
    NeedleSpec needle{NeedleTip::triangle, NeedleGauge::thick};
    CoreSpec core;
    FixationPolicy fixation;
    FeltConfig felt;
    CoilConfig coil;
    int embroidery_sectors = 24;
    double embroidery_base_fraction = 1.0;  // base radius = fraction * min r_max
    long embroidery_fix_punches = 10;       // per stack layer
    double profile_tolerance = -1.0;        // accepted residual, default 1 line width
};

struct FabricationPlan {
    TransformMethod method = TransformMethod::regular;
    CoilSchedule coil;
    std::vector<FeltOp> felts;  // shaping ops; fixation is policy-driven at emit
    MaterialSpec material;
    CoreSpec core;
    FixationPolicy fixation;
    NeedleSpec needle;
    TensionLevel tension = TensionLevel::low;
    double line_width = 2.0;
    PlanCounts metadata;  // commands filled in by emit()

    void validate(const StewartGeometry& geom, const WorkEnvelope& env) const;
};

// Coil the bounding cylinder of the profile, then felt everything down to
// the target. Simple, but felting-heavy for strongly varying profiles.
FabricationPlan plan_regular(const RadialProfile& profile, const PlanParams& params,
                             const ProcessModels& models, const StewartGeometry& geom,
                             const WorkEnvelope& env);

// Vary coil layer counts per slab to approximate r_max(z) within one line
// width, felting only the residual.
FabricationPlan plan_fit(const RadialProfile& profile, const PlanParams& params,
                         const ProcessModels& models, const StewartGeometry& geom,
                         const WorkEnvelope& env);

// Coil a base cylinder at the profile minimum and build protruding
// (z, theta) cells with fixated yarn stacks.
FabricationPlan plan_embroidered(const TriMesh& mesh, const RadialProfile& profile,
                                 const PlanParams& params, const ProcessModels& models,
                                 const StewartGeometry& geom, const WorkEnvelope& env);

// Coiled surface the plan's schedule reaches, per slab of `target`; used to
// size compression and by tests to check fidelity.
RadialProfile planned_coil_profile(const FabricationPlan& plan, const RadialProfile& target);

PlanTimes estimate_time(const FabricationPlan& plan, const TimeModel& model);

}  // namespace feltloom
