#include "semiwkb/regge.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <locale>
#include <set>
#include <sstream>

#include "semiwkb/error.hpp"

namespace semiwkb {

std::vector<TrajectoryPoint> regge_trajectory(int n_r, int l_max, double kappa, double alpha_s) {
  if (l_max < 1) throw Error(ErrorKind::InvalidArgument, "regge_trajectory requires l_max >= 1");
  if (n_r < 0) throw Error(ErrorKind::InvalidArgument, "n_r must be >= 0");
  if (!(kappa > 0.0)) throw Error(ErrorKind::InvalidArgument, "kappa must be > 0");
  std::vector<TrajectoryPoint> points;
  const double slope = 8.0 * kappa;
  for (int l = 0; l <= l_max; ++l) {
    points.push_back({l, slope * (2.0 * n_r + l - alpha_s + 1.5)});
  }
  return points;
}

ReggeFit fit_regge(const std::vector<MesonRecord>& records) {
  if (records.size() < 3) {
    throw Error(ErrorKind::DegenerateFit, "degenerate fit: need at least 3 records");
  }
  std::set<int> distinct;
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (const auto& r : records) {
    if (!(r.mass > 0.0) || r.l < 0 || r.n_r < 0 || !(r.weight > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "invalid meson record '" + r.name + "'");
    }
    distinct.insert(2 * r.n_r + r.l);
    const double x = 2.0 * r.n_r + r.l + 1.5;
    sw += r.weight;
    sx += r.weight * x;
    sy += r.weight * r.mass * r.mass;
  }
  if (distinct.size() < 2) {
    throw Error(ErrorKind::DegenerateFit, "degenerate fit: all records share one 2 n_r + l");
  }
  // Centered normal equations.
  const double x_mean = sx / sw;
  const double y_mean = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : records) {
    const double dx = 2.0 * r.n_r + r.l + 1.5 - x_mean;
    sxx += r.weight * dx * dx;
    sxy += r.weight * dx * (r.mass * r.mass - y_mean);
  }
  const double slope = sxy / sxx;
  const double intercept = y_mean - slope * x_mean;

  ReggeFit fit;
  fit.kappa = slope / 8.0;
  fit.alpha_s = -intercept / slope;
  fit.c_sq = -intercept;
  double ss = 0.0;
  for (const auto& r : records) {
    const double x = 2.0 * r.n_r + r.l + 1.5;
    const double res = r.mass * r.mass - (slope * x + intercept);
    fit.per_point_residuals.push_back(res);
    ss += res * res;
  }
  fit.rms_residual = std::sqrt(ss / static_cast<double>(records.size()));
  if (!(fit.kappa > 0.0)) fit.warnings.push_back("non-positive string tension");
  if (fit.alpha_s < 0.0) fit.warnings.push_back("alpha_s < 0: shift has the opposite sign");
  return fit;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

[[noreturn]] void bad_line(int line_no, const std::string& why) {
  throw Error(ErrorKind::InvalidArgument,
              "meson csv line " + std::to_string(line_no) + ": " + why);
}

template <class T>
T parse_number(const std::string& s, int line_no, const char* field) {
  std::istringstream is(s);
  is.imbue(std::locale::classic());
  T v{};
  is >> v;
  if (s.empty() || is.fail() || !is.eof()) bad_line(line_no, std::string("bad ") + field);
  return v;
}

}  // namespace

std::vector<MesonRecord> read_meson_csv(std::istream& in) {
  std::vector<MesonRecord> out;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool weighted = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto cells = split(t);
    if (!have_header) {
      const std::vector<std::string> base = {"name", "mass_gev", "l", "n_r"};
      if (cells.size() < 4 || cells.size() > 5 ||
          !std::equal(base.begin(), base.end(), cells.begin()) ||
          (cells.size() == 5 && cells[4] != "weight")) {
        bad_line(line_no, "header must be name,mass_gev,l,n_r[,weight]");
      }
      weighted = cells.size() == 5;
      have_header = true;
      continue;
    }
    if (cells.size() != (weighted ? 5u : 4u)) bad_line(line_no, "wrong number of fields");
    MesonRecord r;
    r.name = cells[0];
    r.mass = parse_number<double>(cells[1], line_no, "mass_gev");
    r.l = parse_number<int>(cells[2], line_no, "l");
    r.n_r = parse_number<int>(cells[3], line_no, "n_r");
    if (weighted) r.weight = parse_number<double>(cells[4], line_no, "weight");
    if (!(r.mass > 0.0) || r.l < 0 || r.n_r < 0 || !(r.weight > 0.0)) {
      bad_line(line_no, "mass and weight must be > 0, l and n_r >= 0");
    }
    out.push_back(std::move(r));
  }
  if (!have_header) throw Error(ErrorKind::InvalidArgument, "meson csv: missing header");
  return out;
}

std::vector<MesonRecord> read_meson_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  return read_meson_csv(in);
}

}  // namespace semiwkb
