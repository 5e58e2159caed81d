#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "xcmos/errors.hpp"

namespace xcmos {

enum class DeviceClass {
    ChargeFET,
    Ferroelectric,
    NDR,
    ASL,
    CSL,
    MLogic,
    MEMTJ,
    SWD,
    CoMET,
};

enum class GateKind { INV, NAND2, XOR2, MAJ3, DominoFA };

enum class CslVariant { Base, CopperCollector, Complementary, YIG };
enum class MemtjVariant { Standard, CompactSingleDomain, Preset };

enum class AnisotropyKind { InPlane, PMA };

const char* to_string(DeviceClass c);
const char* to_string(GateKind k);
const char* to_string(CslVariant v);
const char* to_string(MemtjVariant v);
const char* to_string(AnisotropyKind a);

bool is_spintronic(DeviceClass c);
bool is_charge_based(DeviceClass c);

/// Per-gate-kind cost constants for the charge-device gate model.
/// k_gate scales the switched input capacitance per driven input;
/// n_dev counts minimum devices per gate (leakage and footprint).
/// Declared defaults; a netlist config file may override them.
struct GateCostTable {
    std::array<double, 5> k_gate{1.0, 1.5, 3.0, 2.0, 4.0};
    std::array<double, 5> n_dev{2.0, 4.0, 10.0, 6.0, 26.0};

    double k(GateKind g) const { return k_gate[static_cast<int>(g)]; }
    double n(GateKind g) const { return n_dev[static_cast<int>(g)]; }
};

struct MagnetParams {
    double M_s = 0.0;    // saturation magnetization, A/m
    double K_u = 0.0;    // effective uniaxial anisotropy energy density, J/m^3
    double alpha = 0.0;  // Gilbert damping
    double eta = 0.0;    // spin injection/detection polarization, (0,1]
    double length = 0.0; // m
    double width = 0.0;  // m
    double thickness = 0.0; // m
    double T = 300.0;    // operating temperature, K
    AnisotropyKind anisotropy_kind = AnisotropyKind::InPlane;

    double volume() const { return length * width * thickness; }
    /// Thermal stability factor K_u*V/(k_B*T).
    double delta() const;
    /// Throws Error(Validation) naming the offending field. `where`
    /// prefixes messages so library loads can name the device.
    void validate(const std::string& where = {}) const;
};

/// Minimum retention barrier; magnets below this are rejected.
inline constexpr double kThermalStabilityFloor = 40.0;

struct SpinChannelParams {
    double beta = 0.0;   // spin injection coefficient, (0,1]
    double l_sf = 0.0;   // spin diffusion length, m
    double l_c = 0.0;    // channel length, m
    double l_g = 0.0;    // ground-path length, m
    double rho = 0.0;    // channel resistivity, Ohm*m
    double cross_section = 0.0; // m^2

    double channel_resistance() const { return rho * (l_c + l_g) / cross_section; }
    void validate(const std::string& where = {}) const;
};

struct DeviceParams {
    std::string name;
    DeviceClass cls = DeviceClass::ChargeFET;
    double V_dd = 0.0;   // V
    double I_on = 0.0;   // A per minimum device at V_dd
    double I_off = 0.0;  // A
    double C_gate = 0.0; // F, input capacitance per device
    double A_dev = 0.0;  // m^2, minimum-device footprint
    double t_p = 0.0;    // s, extra polarization switching time (0 unless ferroelectric)
    CslVariant csl_variant = CslVariant::Base;
    MemtjVariant memtj_variant = MemtjVariant::Standard;
    std::optional<MagnetParams> magnet;
    std::optional<SpinChannelParams> channel;
    std::map<std::string, double> extras;

    void validate() const;
    /// Fetch a required class-specific scalar; missing -> InvalidParameter.
    double extra(const std::string& key) const;
    double extra_or(const std::string& key, double fallback) const;
    bool has_extra(const std::string& key) const;
};

struct GateMetrics {
    GateKind kind = GateKind::INV;
    double t_gate = 0.0; // s
    double E_dyn = 0.0;  // J per switching event
    double P_leak = 0.0; // W
    double A_gate = 0.0; // m^2
};

// ---- charge-device gate model ------------------------------------------

/// Gate metrics for ChargeFET / Ferroelectric / NDR devices.
/// C_drive = k_gate*C_gate*(1 + fanout) + ext_load;
/// t = C_drive*V_dd/I_on + t_p; E = C_drive*V_dd^2;
/// P_leak = n_dev*I_off*V_dd; A = n_dev*A_dev.
GateMetrics fet_gate_metrics(const DeviceParams& dev, GateKind kind,
                             int fanout = 1, double ext_load = 0.0,
                             const GateCostTable& table = {});

/// Same gate model; hold_time is returned to callers through
/// hold_energy = P_leak*hold_time (the supply stays clocked on this
/// gate until the word completes, leaking statically).
GateMetrics ndr_gate_metrics(const DeviceParams& dev, GateKind kind,
                             double hold_time, int fanout = 1,
                             double ext_load = 0.0,
                             const GateCostTable& table = {});

inline double ndr_hold_energy(const GateMetrics& g, double hold_time) {
    return g.P_leak * hold_time;
}

// ---- spin transport and magnet dynamics ---------------------------------

/// Spin current density delivered through a diffusive channel with a
/// ground branch at the injector and an ideal absorber at the far end:
///   J_s = beta*J_c * sinh(l_g/l_sf) / sinh((l_c+l_g)/l_sf)
/// evaluated in overflow-safe exponential form. l_c = 0 returns
/// beta*J_c exactly; l_g = 0 is a degenerate geometry.
double asl_spin_current_density(const SpinChannelParams& ch, double J_c);

/// Macrospin critical switching current from angular-momentum
/// conservation: I_c = 4*q*alpha*K_u*V/(hbar*eta). In-plane magnets
/// supply their shape-anisotropy-inclusive barrier directly as K_u.
/// Requires delta >= 40; alpha = 0 yields 0 (unphysical, not fatal).
double critical_spin_current(const MagnetParams& m);

inline constexpr double kSwitchingDelayCap = 1e-3; // s

/// Magnet reversal time t = q*(M_s*V/mu_B)/(I_s - I_c). Subcritical
/// drive throws NoSwitching; delays beyond `cap` throw SwitchCapExceeded.
double magnet_switching_delay(const MagnetParams& m, double I_s,
                              double cap = kSwitchingDelayCap);

// ---- per-family gate metrics --------------------------------------------

/// Spin-current enhancement of a CSL structure variant over the base
/// write path (copper collector x2, YIG isolation a further x1.5).
double csl_variant_gain(CslVariant v);

/// Write-magnet volume/footprint scale: Base and CopperCollector magnets
/// are sized 3x to carry two read junctions.
double csl_magnet_scale(CslVariant v);

/// Extra footprint of the split pull-up/pull-down realization.
double csl_area_factor(CslVariant v);

/// The write magnet a CSL variant actually switches (volume scaled for
/// the two-junction structures).
MagnetParams csl_write_magnet(const DeviceParams& dev, CslVariant v);

/// Spin-Hall written, dipole/TMR read logic gate. extras: R_write (Ohm),
/// C_clock (F); optional drive_derate (default 1) abstracts the output
/// resistance network of the driving stage.
GateMetrics csl_gate_metrics(const DeviceParams& dev, CslVariant variant,
                             GateKind kind = GateKind::MAJ3,
                             const GateCostTable& table = {});

/// Magnetoelectric-written, matched-MTJ-divider read gate. extras:
/// C_ME, V_ME, R_MTJ, TMR, t_ME_switch.
GateMetrics memtj_gate_metrics(const DeviceParams& dev, MemtjVariant variant,
                               GateKind kind = GateKind::MAJ3,
                               const GateCostTable& table = {});

/// Read-path output swing of the matched MTJ divider.
double memtj_output_swing(double V_dd, double tmr);

/// Domain-wall complementary logic gate. extras: mu_dw (m^3/(A*s)),
/// J_c0 (A/m^2), L_track (m), R_write (Ohm), A_track_cross (m^2).
GateMetrics mlogic_gate_metrics(const DeviceParams& dev,
                                GateKind kind = GateKind::NAND2,
                                const GateCostTable& table = {});

/// Domain-wall velocity law v = mu_dw*(J - J_c0); J <= J_c0 throws NoMotion.
double domain_wall_velocity(double mu_dw, double J, double J_c0);

/// SWD / CoMET gates. SWD extras: t_metastable_settle, t_wave_prop,
/// C_ME, V_ME, E_clock, n_cells_per_clock_driver. CoMET extras:
/// t_nucleation, L_prop, v_DW, E_transistor, E_joule, P_leak_inv.
GateMetrics me_device_metrics(const DeviceParams& dev, DeviceClass kind,
                              GateKind gate = GateKind::MAJ3,
                              const GateCostTable& table = {});

/// Spin-diffusion (channel-coupled) majority logic gate: drive I_on
/// injected, delivered spin current from the channel transfer ratio,
/// Joule heating over the switching window plus driver charging.
GateMetrics asl_gate_metrics(const DeviceParams& dev,
                             GateKind kind = GateKind::MAJ3,
                             const GateCostTable& table = {});

/// Dispatch on device class. NDR gates are evaluated with zero hold
/// time here; circuit composition accounts for word-completion holds.
GateMetrics device_gate_metrics(const DeviceParams& dev, GateKind kind,
                                int fanout = 1, double ext_load = 0.0,
                                const GateCostTable& table = {});

/// Intrinsic device delay: minimum inverter driving one copy of itself.
double intrinsic_delay(const DeviceParams& dev, const GateCostTable& table = {});

} // namespace xcmos
