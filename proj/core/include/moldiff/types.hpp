#pragma once

#include <string>

#include "moldiff/constants.hpp"

namespace moldiff {

// All domain types store SI values. Construction goes through from_units()
// which converts from the interface units (amu, nm, mm, um, meV nm^3) and
// validates the invariants. Keeping the core SI-only avoids mixed-unit
// arithmetic; only the config and CSV layers speak interface units.

/// One molecular species: mass, surface interaction constant and
/// fluorescence photon budget.
struct MoleculeSpec {
  std::string name;
  double mass_kg = 0.0;
  double c3_J_m3 = 0.0;            // van der Waals constant vs the SiNx wall
  double photon_budget_mean = 0.0; // mean emitted photons before bleaching
  double fluorescence_rate_hz = 0.0;

  static MoleculeSpec from_units(std::string name, double mass_amu,
                                 double c3_mev_nm3, double photon_budget_mean,
                                 double fluorescence_rate_hz);

  double mass_amu() const { return mass_kg / constants::amu_kg; }
  double c3_mev_nm3() const { return c3_J_m3 / constants::mev_nm3_to_J_m3; }

  void validate() const;
};

/// Transmission grating: period d, open slit width s, membrane thickness t,
/// illuminated window width w. The number of illuminated slits is
/// floor(w / d).
struct GratingSpec {
  double period_m = 0.0;
  double open_width_m = 0.0;
  double thickness_m = 0.0;
  double window_width_m = 0.0;

  static GratingSpec from_units(double period_nm, double open_width_nm,
                                double thickness_nm, double window_width_um);

  int slit_count() const;

  double period_nm() const { return period_m / constants::nm; }
  double open_width_nm() const { return open_width_m / constants::nm; }
  double thickness_nm() const { return thickness_m / constants::nm; }
  double window_width_um() const { return window_width_m / constants::um; }

  void validate() const;
};

/// Collimation-slit-to-grating and grating-to-screen distances plus the
/// incoherent source model (horizontal extent = collimation slit width).
/// Vertical positions are measured downward from the source axis, so a
/// molecule's screen height equals its gravitational drop.
struct BeamlineGeometry {
  double l1_m = 0.0;
  double l2_m = 0.0;
  double source_width_m = 0.0;
  double source_height_offset_m = 0.0;
  double gravity = constants::default_gravity;

  static BeamlineGeometry from_units(double l1_mm, double l2_mm,
                                     double source_width_um,
                                     double source_height_offset_um,
                                     double gravity = constants::default_gravity);

  double flight_length_m() const { return l1_m + l2_m; }

  double l1_mm() const { return l1_m / constants::mm; }
  double l2_mm() const { return l2_m / constants::mm; }
  double source_width_um() const { return source_width_m / constants::um; }
  double source_height_offset_um() const {
    return source_height_offset_m / constants::um;
  }

  void validate() const;
};

enum class VelocityKind {
  beam_maxwell_boltzmann, // flux-weighted v^3 exp(-m v^2 / 2 k T)
  shifted_mb,             // v^3 exp(-m (v - v0)^2 / 2 k T)
  uniform,
};

const char* to_string(VelocityKind kind);
VelocityKind velocity_kind_from_string(const std::string& s);

/// Longitudinal velocity distribution, truncated to [v_min, v_max] and
/// normalized over that support.
struct VelocityModel {
  VelocityKind kind = VelocityKind::beam_maxwell_boltzmann;
  double temperature_K = 0.0;
  double shift_m_s = 0.0; // v0, ignored unless kind == shifted_mb
  double v_min = 0.0;
  double v_max = 0.0;

  void validate() const;
};

} // namespace moldiff
