#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace semiwkb {

struct MesonRecord {
  std::string name;
  double mass;  // GeV
  int l;
  int n_r;
  double weight = 1.0;
};

struct ReggeFit {
  double kappa;
  double alpha_s;
  double c_sq;  // 8 kappa alpha_s
  double rms_residual;
  std::vector<double> per_point_residuals;  // M^2_i - fitted M^2_i, GeV^2
  std::vector<std::string> warnings;
};

struct TrajectoryPoint {
  int l;
  double e_sq;
};

/// (l, 8 kappa (2 n_r + l - alpha_s + 3/2)) for l = 0..l_max.
std::vector<TrajectoryPoint> regge_trajectory(int n_r, int l_max, double kappa, double alpha_s);

/// Weighted least squares of M^2 on x = 2 n_r + l + 3/2:
/// M^2 = 8 kappa x - 8 kappa alpha_s.
ReggeFit fit_regge(const std::vector<MesonRecord>& records);

/// Parses `name,mass_gev,l,n_r[,weight]` with a mandatory header; blank
/// lines and `#` comments are skipped.
std::vector<MesonRecord> read_meson_csv(std::istream& in);
std::vector<MesonRecord> read_meson_csv_file(const std::string& path);

}  // namespace semiwkb
