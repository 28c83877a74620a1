#pragma once

#include <filesystem>

#include <json.hpp>

#include "photonstat/sim/scene.hpp"

namespace photonstat::io {

/// JSON (de)serialization for the simulation configuration types. A run
/// config file holds the three sections under "scene", "camera", "drift";
/// camera and drift may be omitted (defaults apply).
struct RunSetup {
  sim::SceneSpec scene;
  sim::CameraConfig camera;
  sim::DriftModel drift;
};

nlohmann::json to_json(const sim::SceneSpec& scene);
nlohmann::json to_json(const sim::CameraConfig& camera);
nlohmann::json to_json(const sim::DriftModel& drift);

sim::SceneSpec scene_from_json(const nlohmann::json& j);
sim::CameraConfig camera_from_json(const nlohmann::json& j);
sim::DriftModel drift_from_json(const nlohmann::json& j);

RunSetup load_run_setup(const std::filesystem::path& path);
void save_run_setup(const RunSetup& setup, const std::filesystem::path& path);

}  // namespace photonstat::io
