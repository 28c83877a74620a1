#include "photonstat/io/config.hpp"

#include <fstream>

#include "photonstat/errors.hpp"

namespace photonstat::io {

namespace {

using nlohmann::json;

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

json emitter_to_json(const model::EmitterParams& em) {
  return {
      {"decay_rate_k", em.decay_rate_k},
      {"two_photon_prob_p", em.two_photon_prob_p},
      {"brightness_coeff", em.brightness_coeff},
      {"blink_on_rate", em.blink_on_rate},
      {"blink_off_rate", em.blink_off_rate},
      {"bleach_rate", em.bleach_rate},
      {"emission", em.emission_model == model::EmissionModel::kGatePulsed ? "pulsed"
                                                                          : "continuous"},
  };
}

model::EmitterParams emitter_from_json(const json& j) {
  model::EmitterParams em;
  em.decay_rate_k = get_or(j, "decay_rate_k", em.decay_rate_k);
  em.two_photon_prob_p = get_or(j, "two_photon_prob_p", em.two_photon_prob_p);
  em.brightness_coeff = get_or(j, "brightness_coeff", em.brightness_coeff);
  em.blink_on_rate = get_or(j, "blink_on_rate", em.blink_on_rate);
  em.blink_off_rate = get_or(j, "blink_off_rate", em.blink_off_rate);
  em.bleach_rate = get_or(j, "bleach_rate", em.bleach_rate);
  const std::string mode = get_or<std::string>(j, "emission", "continuous");
  if (mode == "continuous") {
    em.emission_model = model::EmissionModel::kContinuous;
  } else if (mode == "pulsed") {
    em.emission_model = model::EmissionModel::kGatePulsed;
  } else {
    throw ValidationError("config: unknown emission model '" + mode + "'");
  }
  return em;
}

}  // namespace

json to_json(const sim::SceneSpec& scene) {
  json excitation;
  if (scene.excitation.kind == sim::ExcitationField::Kind::kUniform) {
    excitation = {{"kind", "uniform"}, {"amplitude", scene.excitation.amplitude}};
  } else {
    excitation = {{"kind", "gaussian"},
                  {"amplitude", scene.excitation.amplitude},
                  {"center", {scene.excitation.center_x, scene.excitation.center_y}},
                  {"waist", scene.excitation.waist}};
  }
  json objects = json::array();
  for (const auto& obj : scene.objects) {
    json emitters = json::array();
    for (const auto& em : obj.emitters) emitters.push_back(emitter_to_json(em));
    objects.push_back({{"center", {obj.center_x, obj.center_y}},
                       {"psf_sigma", obj.psf_sigma},
                       {"same_mode", obj.same_mode},
                       {"emitters", emitters}});
  }
  return {{"grid_width", scene.grid_width},
          {"grid_height", scene.grid_height},
          {"excitation", excitation},
          {"normalization_alpha", scene.normalization_alpha},
          {"objects", objects}};
}

sim::SceneSpec scene_from_json(const json& j) {
  sim::SceneSpec scene;
  scene.grid_width = j.at("grid_width").get<std::uint32_t>();
  scene.grid_height = j.at("grid_height").get<std::uint32_t>();
  scene.normalization_alpha = get_or(j, "normalization_alpha", 1.0);
  if (j.contains("excitation")) {
    const json& e = j.at("excitation");
    const std::string kind = get_or<std::string>(e, "kind", "uniform");
    if (kind == "uniform") {
      scene.excitation.kind = sim::ExcitationField::Kind::kUniform;
    } else if (kind == "gaussian") {
      scene.excitation.kind = sim::ExcitationField::Kind::kGaussian;
      const auto center = e.at("center").get<std::vector<double>>();
      if (center.size() != 2) throw ValidationError("config: excitation center needs 2 values");
      scene.excitation.center_x = center[0];
      scene.excitation.center_y = center[1];
      scene.excitation.waist = e.at("waist").get<double>();
    } else {
      throw ValidationError("config: unknown excitation kind '" + kind + "'");
    }
    scene.excitation.amplitude = get_or(e, "amplitude", 1.0);
  }
  for (const json& o : j.at("objects")) {
    sim::ObjectSpec obj;
    const auto center = o.at("center").get<std::vector<double>>();
    if (center.size() != 2) throw ValidationError("config: object center needs 2 values");
    obj.center_x = center[0];
    obj.center_y = center[1];
    obj.psf_sigma = get_or(o, "psf_sigma", 1.0);
    obj.same_mode = get_or(o, "same_mode", false);
    for (const json& e : o.at("emitters")) obj.emitters.push_back(emitter_from_json(e));
    scene.objects.push_back(std::move(obj));
  }
  scene.validate();
  return scene;
}

json to_json(const sim::CameraConfig& camera) {
  return {{"gate_width_ns", camera.gate.gate_width_ns},
          {"frame_period_ms", camera.gate.frame_period_ms},
          {"binning", camera.binning},
          {"quantum_efficiency", camera.quantum_efficiency},
          {"dark_event_rate", camera.dark_event_rate},
          {"readout",
           {{"photon_mean", camera.readout.photon_mean},
            {"photon_sd", camera.readout.photon_sd},
            {"empty_mean", camera.readout.empty_mean},
            {"empty_sd", camera.readout.empty_sd}}},
          {"splitter_ratio", camera.splitter_ratio},
          {"image_offset_b", {camera.offset_b_x, camera.offset_b_y}},
          {"analog", camera.analog}};
}

sim::CameraConfig camera_from_json(const json& j) {
  sim::CameraConfig camera;
  camera.gate.gate_width_ns = get_or(j, "gate_width_ns", camera.gate.gate_width_ns);
  camera.gate.frame_period_ms = get_or(j, "frame_period_ms", camera.gate.frame_period_ms);
  camera.binning = get_or(j, "binning", camera.binning);
  camera.quantum_efficiency = get_or(j, "quantum_efficiency", camera.quantum_efficiency);
  camera.dark_event_rate = get_or(j, "dark_event_rate", camera.dark_event_rate);
  if (j.contains("readout")) {
    const json& r = j.at("readout");
    camera.readout.photon_mean = get_or(r, "photon_mean", camera.readout.photon_mean);
    camera.readout.photon_sd = get_or(r, "photon_sd", camera.readout.photon_sd);
    camera.readout.empty_mean = get_or(r, "empty_mean", camera.readout.empty_mean);
    camera.readout.empty_sd = get_or(r, "empty_sd", camera.readout.empty_sd);
  }
  camera.splitter_ratio = get_or(j, "splitter_ratio", camera.splitter_ratio);
  if (j.contains("image_offset_b")) {
    const auto off = j.at("image_offset_b").get<std::vector<double>>();
    if (off.size() != 2) throw ValidationError("config: image_offset_b needs 2 values");
    camera.offset_b_x = off[0];
    camera.offset_b_y = off[1];
  }
  camera.analog = get_or(j, "analog", camera.analog);
  camera.validate();
  return camera;
}

json to_json(const sim::DriftModel& drift) {
  return {{"kind", drift.kind == sim::DriftModel::Kind::kRandomWalk ? "random-walk" : "none"},
          {"step_sd", drift.step_sd},
          {"control_frame_interval", drift.control_frame_interval},
          {"control_accumulate", drift.control_accumulate}};
}

sim::DriftModel drift_from_json(const json& j) {
  sim::DriftModel drift;
  const std::string kind = get_or<std::string>(j, "kind", "none");
  if (kind == "none") {
    drift.kind = sim::DriftModel::Kind::kNone;
  } else if (kind == "random-walk") {
    drift.kind = sim::DriftModel::Kind::kRandomWalk;
  } else {
    throw ValidationError("config: unknown drift kind '" + kind + "'");
  }
  drift.step_sd = get_or(j, "step_sd", drift.step_sd);
  drift.control_frame_interval =
      get_or(j, "control_frame_interval", drift.control_frame_interval);
  drift.control_accumulate = get_or(j, "control_accumulate", drift.control_accumulate);
  drift.validate();
  return drift;
}

RunSetup load_run_setup(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ValidationError("config parse error in " + path.string() + ": " + e.what());
  }
  try {
    RunSetup setup;
    setup.scene = scene_from_json(j.at("scene"));
    if (j.contains("camera")) setup.camera = camera_from_json(j.at("camera"));
    if (j.contains("drift")) setup.drift = drift_from_json(j.at("drift"));
    return setup;
  } catch (const json::exception& e) {
    throw ValidationError("config error in " + path.string() + ": " + e.what());
  }
}

void save_run_setup(const RunSetup& setup, const std::filesystem::path& path) {
  json j = {{"scene", to_json(setup.scene)},
            {"camera", to_json(setup.camera)},
            {"drift", to_json(setup.drift)}};
  std::ofstream f(path);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << j.dump(2) << "\n";
}

}  // namespace photonstat::io
