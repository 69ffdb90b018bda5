#include "moldiff/types.hpp"

#include <cmath>

#include "moldiff/errors.hpp"

namespace moldiff {

MoleculeSpec MoleculeSpec::from_units(std::string name, double mass_amu,
                                      double c3_mev_nm3,
                                      double photon_budget_mean,
                                      double fluorescence_rate_hz) {
  MoleculeSpec m;
  m.name = std::move(name);
  m.mass_kg = mass_amu * constants::amu_kg;
  m.c3_J_m3 = c3_mev_nm3 * constants::mev_nm3_to_J_m3;
  m.photon_budget_mean = photon_budget_mean;
  m.fluorescence_rate_hz = fluorescence_rate_hz;
  m.validate();
  return m;
}

void MoleculeSpec::validate() const {
  if (!(mass_kg > 0.0)) throw config_error("molecule.mass_amu must be > 0");
  if (!(c3_J_m3 >= 0.0)) throw config_error("molecule.c3_mev_nm3 must be >= 0");
  if (!(photon_budget_mean > 0.0))
    throw config_error("molecule.photon_budget_mean must be > 0");
  if (!(fluorescence_rate_hz > 0.0))
    throw config_error("molecule.fluorescence_rate_hz must be > 0");
}

GratingSpec GratingSpec::from_units(double period_nm, double open_width_nm,
                                    double thickness_nm,
                                    double window_width_um) {
  GratingSpec g;
  g.period_m = period_nm * constants::nm;
  g.open_width_m = open_width_nm * constants::nm;
  g.thickness_m = thickness_nm * constants::nm;
  g.window_width_m = window_width_um * constants::um;
  g.validate();
  return g;
}

int GratingSpec::slit_count() const {
  return static_cast<int>(std::floor(window_width_m / period_m));
}

void GratingSpec::validate() const {
  if (!(period_m > 0.0)) throw config_error("grating.period_nm must be > 0");
  if (!(open_width_m > 0.0 && open_width_m < period_m))
    throw config_error("grating.open_width_nm must satisfy 0 < s < d");
  if (!(thickness_m > 0.0))
    throw config_error("grating.thickness_nm must be > 0");
  if (!(window_width_m >= period_m))
    throw config_error("grating.window_width_um must cover at least one period");
}

BeamlineGeometry BeamlineGeometry::from_units(double l1_mm, double l2_mm,
                                              double source_width_um,
                                              double source_height_offset_um,
                                              double gravity) {
  BeamlineGeometry g;
  g.l1_m = l1_mm * constants::mm;
  g.l2_m = l2_mm * constants::mm;
  g.source_width_m = source_width_um * constants::um;
  g.source_height_offset_m = source_height_offset_um * constants::um;
  g.gravity = gravity;
  g.validate();
  return g;
}

void BeamlineGeometry::validate() const {
  if (!(l1_m > 0.0)) throw config_error("geometry.l1_mm must be > 0");
  if (!(l2_m > 0.0)) throw config_error("geometry.l2_mm must be > 0");
  if (!(source_width_m > 0.0))
    throw config_error("geometry.source_width_um must be > 0");
  if (!(gravity > 0.0)) throw config_error("geometry.gravity_m_s2 must be > 0");
}

const char* to_string(VelocityKind kind) {
  switch (kind) {
    case VelocityKind::beam_maxwell_boltzmann: return "beam_maxwell_boltzmann";
    case VelocityKind::shifted_mb: return "shifted_mb";
    case VelocityKind::uniform: return "uniform";
  }
  return "?";
}

VelocityKind velocity_kind_from_string(const std::string& s) {
  if (s == "beam_maxwell_boltzmann") return VelocityKind::beam_maxwell_boltzmann;
  if (s == "shifted_mb") return VelocityKind::shifted_mb;
  if (s == "uniform") return VelocityKind::uniform;
  throw config_error("unknown velocity.kind '" + s + "'");
}

void VelocityModel::validate() const {
  if (kind != VelocityKind::uniform && !(temperature_K > 0.0))
    throw config_error("velocity.temperature_k must be > 0");
  if (!(v_min >= 0.0)) throw config_error("velocity.v_min_m_s must be >= 0");
  if (!(v_max > v_min))
    throw config_error("velocity.v_max_m_s must be > velocity.v_min_m_s");
}

} // namespace moldiff
