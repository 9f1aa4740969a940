#pragma once

#include "lemni/kernel.hpp"
#include "lemni/recipes.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace lemni {

/// Versioned, replayable JSON record of a construction: the step log with
/// every point's coordinates as full-precision decimal strings, the named
/// outputs, and the certificate table.
nlohmann::json make_trace(const Scene& scene,
                          const std::map<std::string, PointId>& outputs = {},
                          const std::vector<CertificateEntry>& certificate = {});

/// Re-executes a trace and verifies that every recomputed coordinate string
/// matches the recorded one exactly. Returns the rebuilt scene.
/// Throws std::runtime_error on any mismatch.
Scene replay_trace(const nlohmann::json& doc);

std::string obj_name(ObjRef r);

}  // namespace lemni
