#include "semiwkb/model.hpp"

#include <sstream>

namespace semiwkb {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Supercritical: return "supercritical coupling";
    case ErrorKind::NonNormalizable: return "non-normalizable (vector confinement)";
    case ErrorKind::NoBoundRegion: return "no bound region";
    case ErrorKind::NoBoundState: return "no bound state";
    case ErrorKind::NotEigenvalue: return "not an eigenvalue";
    case ErrorKind::NotConverged: return "not converged";
    case ErrorKind::Unphysical: return "unphysical";
    case ErrorKind::DegenerateFit: return "degenerate fit";
  }
  return "unknown";
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::Coulomb: return "coulomb";
    case Family::Linear: return "linear";
    case Family::Funnel: return "funnel";
  }
  return "?";
}

const char* to_string(Coupling c) noexcept {
  return c == Coupling::Vector ? "vector" : "scalar";
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, msg);
}

}  // namespace

PotentialSpec::PotentialSpec(Family f, Coupling c, double mass, double alpha, double kappa,
                             bool two_body)
    : family_(f), coupling_(c), mass_(mass), alpha_(alpha), kappa_(kappa), two_body_(two_body) {
  require(std::isfinite(mass) && mass >= 0.0, "mass must be finite and >= 0");
  require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be finite and >= 0");
  require(std::isfinite(kappa) && kappa >= 0.0, "kappa must be finite and >= 0");
  if (confining()) {
    require(kappa > 0.0, "kappa > 0 required for linear and funnel potentials");
  }
}

PotentialSpec PotentialSpec::coulomb(Coupling coupling, double mass, double alpha, bool two_body) {
  return PotentialSpec(Family::Coulomb, coupling, mass, alpha, 0.0, two_body);
}

PotentialSpec PotentialSpec::linear(Coupling coupling, double mass, double kappa, bool two_body) {
  return PotentialSpec(Family::Linear, coupling, mass, 0.0, kappa, two_body);
}

PotentialSpec PotentialSpec::funnel(Coupling coupling, double mass, double alpha_s, double kappa,
                                    bool two_body) {
  return PotentialSpec(Family::Funnel, coupling, mass, alpha_s, kappa, two_body);
}

std::string PotentialSpec::describe() const {
  std::ostringstream os;
  os << to_string(family_) << '/' << to_string(coupling_) << " m=" << mass_;
  if (family_ != Family::Linear) os << " alpha=" << alpha_;
  if (confining()) os << " kappa=" << kappa_;
  if (two_body_) os << " two-body";
  return os.str();
}

QuantumNumbers::QuantumNumbers(int n_r, int l, int m_int) : n_r_(n_r), l_(l), m_int_(m_int) {
  require(n_r >= 0, "n_r must be >= 0");
  require(l >= 0, "l must be >= 0");
  require(m_int >= 0 && m_int <= l, "m must satisfy 0 <= m <= l");
}

CoulombAux coulomb_aux(int l, double alpha) {
  const double c = centrifugal_coefficient(l);
  const double a2 = alpha * alpha;
  return {c >= a2 ? std::sqrt(c - a2) : std::nan(""), std::sqrt(c + a2)};
}

bool supercritical(const PotentialSpec& spec, int l) noexcept {
  return spec.coupling() == Coupling::Vector && spec.family() != Family::Linear &&
         spec.alpha() > l + 0.5;
}

double potential_value(double r, const PotentialSpec& spec) {
  if (!(r > 0.0)) throw Error(ErrorKind::Domain, "potential_value: r must be > 0");
  switch (spec.family()) {
    case Family::Coulomb: return -spec.alpha() / r;
    case Family::Linear: return spec.kappa() * r;
    case Family::Funnel: return -spec.alpha() / r + spec.kappa() * r;
  }
  return 0.0;
}

double effective_mass(double r, const PotentialSpec& spec) {
  return spec.mass() + potential_value(r, spec);
}

double effective_p_squared_signed(double r, double energy, const PotentialSpec& spec, int l) {
  if (r == 0.0 || !std::isfinite(r)) {
    throw Error(ErrorKind::Domain, "effective_p_squared: r must be finite and nonzero");
  }
  double v = 0.0;
  switch (spec.family()) {
    case Family::Coulomb: v = -spec.alpha() / r; break;
    case Family::Linear: v = spec.kappa() * r; break;
    case Family::Funnel: v = -spec.alpha() / r + spec.kappa() * r; break;
  }
  const double ek = spec.kinetic_energy(energy);
  const double m = spec.mass();
  const double centrifugal = centrifugal_coefficient(l) / (r * r);
  // Factored differences of squares keep relative accuracy near threshold.
  const double below = ek - m;  // exact near threshold
  if (spec.coupling() == Coupling::Vector) {
    return (below - v) * (ek + m - v) - centrifugal;
  }
  return (below - v) * (ek + m + v) - centrifugal;
}

double effective_p_squared(double r, double energy, const PotentialSpec& spec,
                           const QuantumNumbers& qn) {
  if (!(r > 0.0)) throw Error(ErrorKind::Domain, "effective_p_squared: r must be > 0");
  return effective_p_squared_signed(r, energy, spec, qn.l());
}

}  // namespace semiwkb
