#include "photoplan/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

namespace photoplan {

std::string format_number(double v) {
  char buf[64];
  // Integral values print as plain integers ("%g" at low precision would
  // render 50 as 5e+01).
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  // %.17g always round-trips but prints noise like 0.10000000000000001;
  // probe ascending precision and keep the first exact representation.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // LF on every platform
  if (!out) {
    throw std::runtime_error("cannot write output file: " + path.string());
  }
  return out;
}

void write_timing(const MissionLog& log, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  std::vector<double> ms = log.eval_ms;
  std::sort(ms.begin(), ms.end());
  out << "candidate evaluations: " << ms.size() << "\n";
  if (!ms.empty()) {
    double mean = std::accumulate(ms.begin(), ms.end(), 0.0) /
                  static_cast<double>(ms.size());
    auto pct = [&](double q) {
      return ms[std::min(ms.size() - 1,
                         static_cast<std::size_t>(q * static_cast<double>(
                                                          ms.size())))];
    };
    out << "mean ms: " << format_number(mean) << "\n";
    out << "median ms: " << format_number(pct(0.5)) << "\n";
    out << "p90 ms: " << format_number(pct(0.9)) << "\n";
    out << "max ms: " << format_number(ms.back()) << "\n";
  }
}

}  // namespace

void write_mission_outputs(const MissionLog& log, const std::string& dir) {
  std::filesystem::path root(dir);
  std::filesystem::create_directories(root);

  {
    std::ofstream out = open_out(root / "trace.csv");
    out << "tick,x,y,z,coverage,photos,best_score\n";
    for (const TraceRow& row : log.trace) {
      out << row.tick << ',' << format_number(row.position.x()) << ','
          << format_number(row.position.y()) << ','
          << format_number(row.position.z()) << ','
          << format_number(row.coverage) << ',' << row.photos << ','
          << format_number(row.best_score) << '\n';
    }
  }
  {
    std::ofstream out = open_out(root / "photos.csv");
    out << "index,tick,x,y,z,gamma_d,gamma_s,coverage_sum,score,"
           "coverage_before,coverage_after\n";
    for (const PhotoRecord& p : log.photos) {
      out << p.index << ',' << p.tick << ','
          << format_number(p.position.x()) << ','
          << format_number(p.position.y()) << ','
          << format_number(p.position.z()) << ','
          << format_number(p.score.gamma_d) << ','
          << format_number(p.score.gamma_s) << ','
          << format_number(p.score.coverage_sum) << ','
          << format_number(p.score.g) << ','
          << format_number(p.coverage_before) << ','
          << format_number(p.coverage_after) << '\n';
    }
  }
  {
    std::ofstream out = open_out(root / "coverage_curve.csv");
    out << "tick,coverage\n";
    for (std::size_t i = 0; i < log.coverage_curve.size(); ++i) {
      out << i << ',' << format_number(log.coverage_curve[i]) << '\n';
    }
  }
  {
    std::ofstream out = open_out(root / "coverage_final.csv");
    out << "x,y,z,mu\n";
    for (std::size_t j = 0; j < log.surface_coords.size(); ++j) {
      const Vec& c = log.surface_coords[j];
      out << format_number(c.x()) << ',' << format_number(c.y()) << ','
          << format_number(c.z()) << ','
          << format_number(log.final_field.mu[static_cast<Eigen::Index>(j)])
          << '\n';
    }
  }
  {
    std::ofstream out = open_out(root / "summary.csv");
    out << "scenario,seed,ticks,photos,final_coverage,termination,aborted\n";
    out << log.scenario_name << ',' << log.seed << ',' << log.ticks << ','
        << log.photos.size() << ','
        << format_number(log.coverage_curve.empty()
                             ? 0.0
                             : log.coverage_curve.back())
        << ',' << log.termination << ',' << (log.aborted ? 1 : 0) << '\n';
  }
  write_timing(log, root / "timing.txt");
}

void write_heatmap_csv(const Heatmap& map, int dims, const std::string& path) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out = open_out(p);
  out << (dims == 3 ? "x,y,z,score\n" : "x,y,score\n");
  for (const HeatmapCell& cell : map.cells) {
    if (!cell.feasible) continue;
    out << format_number(cell.position.x()) << ','
        << format_number(cell.position.y());
    if (dims == 3) out << ',' << format_number(cell.position.z());
    out << ',' << format_number(cell.score) << '\n';
  }
}

}  // namespace photoplan
