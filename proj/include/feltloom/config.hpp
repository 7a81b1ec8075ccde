#pragma once

#include <string>

#include "feltloom/machine_program.hpp"
#include "feltloom/models.hpp"
#include "feltloom/plan.hpp"
#include "feltloom/simulator.hpp"
#include "feltloom/stewart.hpp"

namespace feltloom {

// Everything tunable in one keyed file (JSON). Defaults mirror the machine;
// a loaded file overrides per key and unknown keys are rejected.
struct Config {
    WorkEnvelope envelope;
    StewartGeometry stewart = StewartGeometry::symmetric_default();
    ProcessModels models = ProcessModels::defaults();
    PlanParams plan;
    SimParams simulator;
    EmitConfig emit;

    void validate() const;  // re-checks every module invariant

    static Config defaults();
    static Config from_json_text(const std::string& text);
    std::string to_json_text() const;

    // Resolution order: --config path argument, FELTLOOM_CONFIG env var,
    // defaults.
    static Config load(const std::string& path_or_empty);
};

}  // namespace feltloom
