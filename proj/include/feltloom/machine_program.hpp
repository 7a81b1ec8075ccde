#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "feltloom/plan.hpp"

namespace feltloom {

// Line-oriented machine instructions (.frp). All numeric payloads are
// stored already quantized to the wire precision (mm to 3 decimals,
// degrees and Hz to 2), so serialize/parse round-trips are exact.
struct PoseInstr {
    double x = 0, y = 0, z = 0;           // platform center, machine frame (mm)
    double roll = 0, pitch = 0, yaw = 0;  // degrees

    bool operator==(const PoseInstr&) const = default;
};
struct RotInstr {
    long steps = 0;   // signed axle steps (200 per cycle)
    long speed = 1;   // steps/s, > 0
    bool operator==(const RotInstr&) const = default;
};
struct FeedInstr {
    long feeder_steps = 1;  // per axle cycle; FEED 1 1 disengages the feeder
    long axle_steps = 1;
    bool engaged() const { return feeder_steps > 1 || axle_steps > 1; }
    bool operator==(const FeedInstr&) const = default;
};
struct FeltInstr {
    long duration_ms = 0;
    double freq_hz = 5.0;
    long punches() const;
    bool operator==(const FeltInstr&) const = default;
};
struct DwellInstr {
    long ms = 0;
    bool operator==(const DwellInstr&) const = default;
};
struct MatInstr {
    std::string name = "wool";
    bool operator==(const MatInstr&) const = default;
};
struct TenInstr {
    TensionLevel level = TensionLevel::low;
    bool operator==(const TenInstr&) const = default;
};
struct CommentInstr {
    std::string text;
    bool operator==(const CommentInstr&) const = default;
};

using Instruction = std::variant<PoseInstr, RotInstr, FeedInstr, FeltInstr, DwellInstr,
                                 MatInstr, TenInstr, CommentInstr>;

struct ProgramHeader {
    int version = 1;
    WorkEnvelope envelope;
    std::string geometry_hash;  // 16 hex chars, FNV-1a of the platform geometry

    bool operator==(const ProgramHeader&) const = default;
};

struct MachineProgram {
    ProgramHeader header;
    std::vector<Instruction> instructions;

    bool operator==(const MachineProgram&) const = default;
    void validate() const;  // structural checks (first POSE before first ROT, ranges)
};

struct MachineLimits {
    double felt_freq_min_hz = 1.0;
    double felt_freq_max_hz = 20.0;
};

struct EmitConfig {
    long axle_speed_sps = 400;   // steps/s during coiling
    long position_speed_sps = 200;  // steps/s when turning to a felt station
    double felt_freq_hz = 5.0;
    long turnaround_dwell_ms = 50;
    MachineLimits limits;
};

std::string geometry_hash(const StewartGeometry& geom);

// Expands the plan into instructions: coil passes become FEED + per-cycle
// POSE/ROT sequences (with pose waypoints for crossed passes and fixation
// FELT blocks on the configured cadence), and every shaping FeltOp becomes
// POSE + ROT + FELT. Records the final counts (including the instruction
// count) in plan.metadata. Throws UnreachablePoseError (with the offending
// instruction index in the message) if any pose fails kinematics.
MachineProgram emit(FabricationPlan& plan, const StewartGeometry& geom,
                    const WorkEnvelope& env, const EmitConfig& cfg = {});

std::string serialize(const MachineProgram& program);

// Throws ParseError with 1-based line/column on the first offense.
MachineProgram parse(const std::string& text, const MachineLimits& limits = {});

}  // namespace feltloom
