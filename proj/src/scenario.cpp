#include "photoplan/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace photoplan {
namespace {

struct Entry {
  std::vector<double> numbers;
  std::vector<std::string> words;
  int line = 0;
};

bool numeric_token(const std::string& token, double* out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) return false;
  *out = v;
  return true;
}

// All recognized keys; unknown keys are an error so typos cannot silently
// fall back to defaults.
const std::map<std::string, int>& known_keys() {
  // value: -1 = repeatable, 0 = single occurrence
  static const std::map<std::string, int> keys = {
      {"dimensions", 0},     {"workspace_min", 0},
      {"workspace_max", 0},  {"resolution", 0},
      {"start", 0},          {"seed", 0},
      {"target_center", 0},  {"target_extents", 0},
      {"target_spacing", 0}, {"target_faces", 0},
      {"obstacle", -1},      {"sensor_fov", 0},
      {"sensor_range", 0},   {"sensor_rays", 0},
      {"camera_fov", 0},     {"eval_rays", 0},
      {"capture_rays", 0},   {"beta", 0},
      {"q_d", 0},            {"q_s_low", 0},
      {"q_s_high", 0},       {"gp_sigma_f", 0},
      {"gp_sigma_l", 0},     {"gp_sigma_n", 0},
      {"pso_particles", 0},  {"pso_iterations", 0},
      {"pso_warm_iterations", 0}, {"pso_inertia", 0},
      {"pso_c1", 0},         {"pso_c2", 0},
      {"pso_velocity_cap", 0},
      {"coverage_threshold", 0}, {"max_photos", 0},
      {"gain_floor", 0},     {"reopt_interval", 0},
      {"score_drop_ratio", 0},   {"max_ticks", 0},
      {"inflation", 0},      {"sphere_radius", 0},
      {"rrt_iterations", 0},
  };
  return keys;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, std::vector<Entry>> entries)
      : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  const Entry& one(const std::string& key) const {
    return entries_.at(key).front();
  }

  const std::vector<Entry>& all(const std::string& key) const {
    static const std::vector<Entry> empty;
    auto it = entries_.find(key);
    return it == entries_.end() ? empty : it->second;
  }

  std::vector<double> numbers(const std::string& key, std::size_t count) const {
    const Entry& e = one(key);
    if (e.numbers.size() != count || e.numbers.size() != e.words.size()) {
      throw ScenarioParseError(
          "key '" + key + "' expects " + std::to_string(count) +
              " numeric value(s), got " + std::to_string(e.words.size()),
          e.line);
    }
    return e.numbers;
  }

  double number(const std::string& key) const { return numbers(key, 1)[0]; }

  // Accepts 1 value (applied to both axes) or exactly `spread` values.
  std::vector<double> axis_numbers(const std::string& key, int spread) const {
    const Entry& e = one(key);
    if (e.numbers.size() != e.words.size() ||
        (e.numbers.size() != 1 &&
         e.numbers.size() != static_cast<std::size_t>(spread))) {
      throw ScenarioParseError("key '" + key + "' expects 1 or " +
                                   std::to_string(spread) +
                                   " numeric value(s)",
                               e.line);
    }
    if (e.numbers.size() == 1) {
      return std::vector<double>(static_cast<std::size_t>(spread),
                                 e.numbers[0]);
    }
    return e.numbers;
  }

  int integer(const std::string& key) const {
    double v = number(key);
    double rounded = std::round(v);
    if (std::abs(v - rounded) > 1e-9) {
      throw ScenarioParseError("key '" + key + "' expects an integer",
                               one(key).line);
    }
    return static_cast<int>(rounded);
  }

 private:
  std::map<std::string, std::vector<Entry>> entries_;
};

Vec vec_from(const std::vector<double>& v, int dims) {
  Vec out = Vec::Zero();
  for (int a = 0; a < dims; ++a) out[a] = v[static_cast<std::size_t>(a)];
  return out;
}

}  // namespace

TargetModel Scenario::make_target() const {
  // Occluder faces must be ray-tight at the scenario's cast radius, or views
  // from behind the structure would "see" the photographed faces through the
  // gaps between spheres.
  return TargetModel::box(target_box.center, 2.0 * target_box.half,
                          target_spacing, ws.dims, target_faces,
                          std::min(target_spacing, sphere_radius));
}

std::vector<Vec> Scenario::true_obstacle_samples() const {
  std::vector<Vec> samples;
  for (const Box& box : obstacles) {
    std::vector<Vec> one = box_surface_samples(box, sphere_radius, ws.dims);
    samples.insert(samples.end(), one.begin(), one.end());
  }
  return samples;
}

OccupancyGrid Scenario::true_occupancy() const {
  OccupancyGrid grid(ws);
  for (int z = 0; z < ws.shape[2]; ++z) {
    for (int y = 0; y < ws.shape[1]; ++y) {
      for (int x = 0; x < ws.shape[0]; ++x) {
        const std::array<int, 3> cell{x, y, z};
        const Vec center = ws.cell_center(cell);
        for (const Box& box : obstacles) {
          if (box.contains(center, ws.dims)) {
            grid.set_logodds(ws.linear_index(cell), grid.params().l_max);
            break;
          }
        }
      }
    }
  }
  return grid;
}

Scenario parse_scenario(const std::string& text, const std::string& name) {
  std::map<std::string, std::vector<Entry>> entries;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ScenarioParseError("expected 'key = value' on this line", line_no);
    }
    std::string key = line.substr(0, eq);
    std::string rest = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      std::size_t b = s.find_first_not_of(" \t\r");
      std::size_t e = s.find_last_not_of(" \t\r");
      s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    };
    strip(key);
    strip(rest);
    if (key.empty()) throw ScenarioParseError("missing key before '='", line_no);

    auto spec = known_keys().find(key);
    if (spec == known_keys().end()) {
      throw ScenarioParseError("unknown key '" + key + "'", line_no);
    }
    if (spec->second == 0 && entries.count(key)) {
      throw ScenarioParseError("duplicate key '" + key + "'", line_no);
    }

    Entry entry;
    entry.line = line_no;
    std::istringstream values(rest);
    std::string token;
    while (values >> token) {
      entry.words.push_back(token);
      double v = 0.0;
      if (numeric_token(token, &v)) entry.numbers.push_back(v);
    }
    if (entry.words.empty()) {
      throw ScenarioParseError("key '" + key + "' has no value", line_no);
    }
    entries[key].push_back(entry);
  }

  Reader reader(std::move(entries));
  for (const char* required :
       {"dimensions", "workspace_min", "workspace_max", "resolution",
        "target_center", "target_extents", "start"}) {
    if (!reader.has(required)) {
      throw ScenarioParseError(std::string("missing required key '") +
                                   required + "'",
                               0);
    }
  }

  Scenario s;
  s.name = name;
  int dims = reader.integer("dimensions");
  if (dims != 2 && dims != 3) {
    throw ScenarioParseError("dimensions must be 2 or 3",
                             reader.one("dimensions").line);
  }
  Vec lower = vec_from(reader.numbers("workspace_min",
                                      static_cast<std::size_t>(dims)),
                       dims);
  Vec upper = vec_from(reader.numbers("workspace_max",
                                      static_cast<std::size_t>(dims)),
                       dims);
  double res = reader.number("resolution");
  try {
    s.ws = Workspace(dims, lower, upper, res);
  } catch (const std::invalid_argument& err) {
    throw ScenarioParseError(err.what(), reader.one("workspace_min").line);
  }

  s.start = vec_from(reader.numbers("start", static_cast<std::size_t>(dims)),
                     dims);
  if (reader.has("seed")) {
    double v = reader.number("seed");
    if (v < 0 || std::abs(v - std::round(v)) > 1e-9) {
      throw ScenarioParseError("seed must be a non-negative integer",
                               reader.one("seed").line);
    }
    s.seed = static_cast<std::uint64_t>(std::llround(v));
  }

  Vec t_center = vec_from(
      reader.numbers("target_center", static_cast<std::size_t>(dims)), dims);
  Vec t_extents = vec_from(
      reader.numbers("target_extents", static_cast<std::size_t>(dims)), dims);
  s.target_box = Box{t_center, 0.5 * t_extents};
  if (reader.has("target_spacing")) {
    s.target_spacing = reader.number("target_spacing");
    if (s.target_spacing <= 0) {
      throw ScenarioParseError("target_spacing must be positive",
                               reader.one("target_spacing").line);
    }
  }
  if (reader.has("target_faces")) {
    s.target_faces = reader.one("target_faces").words;
  }

  for (const Entry& e : reader.all("obstacle")) {
    std::size_t need = static_cast<std::size_t>(2 * dims);
    if (e.numbers.size() != need || e.numbers.size() != e.words.size()) {
      throw ScenarioParseError(
          "obstacle expects center then half-extents (" +
              std::to_string(need) + " values)",
          e.line);
    }
    std::vector<double> c(e.numbers.begin(),
                          e.numbers.begin() + static_cast<long>(dims));
    std::vector<double> h(e.numbers.begin() + static_cast<long>(dims),
                          e.numbers.end());
    for (double hv : h) {
      if (hv <= 0) {
        throw ScenarioParseError("obstacle half-extents must be positive",
                                 e.line);
      }
    }
    s.obstacles.push_back(Box{vec_from(c, dims), vec_from(h, dims)});
  }

  // Sensing / camera geometry. FOV and ray-count keys take one value
  // (applied to both axes) or two (horizontal then vertical).
  if (reader.has("sensor_fov")) {
    auto v = reader.axis_numbers("sensor_fov", 2);
    s.sensor.fov_h = v[0];
    s.sensor.fov_v = v[1];
  }
  if (reader.has("sensor_range")) s.sensor.range = reader.number("sensor_range");
  if (dims == 3) {
    s.sensor.rays_h = 24;
    s.sensor.rays_v = 24;
    s.camera.eval_rays_h = 24;
    s.camera.eval_rays_v = 24;
    s.camera.capture_rays_h = 96;
    s.camera.capture_rays_v = 96;
  }
  if (reader.has("sensor_rays")) {
    auto v = reader.axis_numbers("sensor_rays", 2);
    s.sensor.rays_h = static_cast<int>(std::lround(v[0]));
    s.sensor.rays_v = static_cast<int>(std::lround(v[1]));
  }
  if (reader.has("camera_fov")) {
    auto v = reader.axis_numbers("camera_fov", 2);
    s.camera.fov_h = v[0];
    s.camera.fov_v = v[1];
  }
  if (reader.has("eval_rays")) {
    auto v = reader.axis_numbers("eval_rays", 2);
    s.camera.eval_rays_h = static_cast<int>(std::lround(v[0]));
    s.camera.eval_rays_v = static_cast<int>(std::lround(v[1]));
  }
  if (reader.has("capture_rays")) {
    auto v = reader.axis_numbers("capture_rays", 2);
    s.camera.capture_rays_h = static_cast<int>(std::lround(v[0]));
    s.camera.capture_rays_v = static_cast<int>(std::lround(v[1]));
  }
  if (dims == 2) {
    s.sensor.rays_v = 1;
    s.camera.eval_rays_v = 1;
    s.camera.capture_rays_v = 1;
  }

  if (reader.has("beta")) s.camera.scale.knee = reader.number("beta");
  if (reader.has("q_d")) {
    auto v = reader.numbers("q_d", 4);
    s.camera.distortion = UtilityParams{v[0], v[1], v[2], v[3]};
  }
  if (reader.has("q_s_low")) {
    auto v = reader.numbers("q_s_low", 4);
    s.camera.scale.low = UtilityParams{v[0], v[1], v[2], v[3]};
  }
  if (reader.has("q_s_high")) {
    auto v = reader.numbers("q_s_high", 4);
    s.camera.scale.high = UtilityParams{v[0], v[1], v[2], v[3]};
  }

  s.gp.sigma_l = 2.0 * s.target_spacing;
  if (reader.has("gp_sigma_f")) s.gp.sigma_f = reader.number("gp_sigma_f");
  if (reader.has("gp_sigma_l")) s.gp.sigma_l = reader.number("gp_sigma_l");
  if (reader.has("gp_sigma_n")) s.gp.sigma_n = reader.number("gp_sigma_n");
  try {
    s.gp.validate();
  } catch (const std::invalid_argument& err) {
    throw ScenarioParseError(err.what(), 0);
  }

  if (reader.has("pso_particles")) s.swarm.particles = reader.integer("pso_particles");
  if (reader.has("pso_iterations")) s.swarm.iterations = reader.integer("pso_iterations");
  if (reader.has("pso_warm_iterations")) {
    s.swarm.warm_iterations = reader.integer("pso_warm_iterations");
  }
  if (reader.has("pso_inertia")) s.swarm.inertia = reader.number("pso_inertia");
  if (reader.has("pso_c1")) s.swarm.cognitive = reader.number("pso_c1");
  if (reader.has("pso_c2")) s.swarm.social = reader.number("pso_c2");
  if (reader.has("pso_velocity_cap")) {
    s.swarm.velocity_cap_fraction = reader.number("pso_velocity_cap");
  }
  try {
    s.swarm.validate();
  } catch (const std::invalid_argument& err) {
    throw ScenarioParseError(err.what(), 0);
  }

  if (reader.has("coverage_threshold")) {
    s.mission.coverage_threshold = reader.number("coverage_threshold");
  }
  if (reader.has("max_photos")) s.mission.max_photos = reader.integer("max_photos");
  if (reader.has("gain_floor")) s.mission.gain_floor = reader.number("gain_floor");
  if (reader.has("reopt_interval")) {
    s.mission.reopt_interval = reader.integer("reopt_interval");
  }
  if (reader.has("score_drop_ratio")) {
    s.mission.score_drop_ratio = reader.number("score_drop_ratio");
  }
  if (reader.has("max_ticks")) s.mission.max_ticks = reader.integer("max_ticks");
  s.mission.inflation = 1.5 * s.ws.resolution;
  if (reader.has("inflation")) s.mission.inflation = reader.number("inflation");
  if (reader.has("rrt_iterations")) {
    s.mission.rrt_iterations = reader.integer("rrt_iterations");
  }

  s.sphere_radius = 0.75 * s.target_spacing;
  if (reader.has("sphere_radius")) {
    s.sphere_radius = reader.number("sphere_radius");
    if (s.sphere_radius <= 0) {
      throw ScenarioParseError("sphere_radius must be positive",
                               reader.one("sphere_radius").line);
    }
  }

  if (!s.ws.contains(s.start)) {
    throw ScenarioParseError("start lies outside the workspace",
                             reader.one("start").line);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  std::string name = path;
  std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_scenario(buffer.str(), name);
}

}  // namespace photoplan
