#include "xcmos/device_models.hpp"

#include <cmath>

#include "xcmos/constants.hpp"

namespace xcmos {

namespace {

using constants::hbar;
using constants::k_B;
using constants::mu_B;
using constants::q_e;

void require(bool ok, Errc code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

std::string prefixed(const std::string& where, const std::string& msg) {
    return where.empty() ? msg : where + ": " + msg;
}

} // namespace

const char* to_string(DeviceClass c) {
    switch (c) {
        case DeviceClass::ChargeFET: return "ChargeFET";
        case DeviceClass::Ferroelectric: return "Ferroelectric";
        case DeviceClass::NDR: return "NDR";
        case DeviceClass::ASL: return "ASL";
        case DeviceClass::CSL: return "CSL";
        case DeviceClass::MLogic: return "mLogic";
        case DeviceClass::MEMTJ: return "MEMTJ";
        case DeviceClass::SWD: return "SWD";
        case DeviceClass::CoMET: return "CoMET";
    }
    return "?";
}

const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::INV: return "INV";
        case GateKind::NAND2: return "NAND2";
        case GateKind::XOR2: return "XOR2";
        case GateKind::MAJ3: return "MAJ3";
        case GateKind::DominoFA: return "DominoFA";
    }
    return "?";
}

const char* to_string(CslVariant v) {
    switch (v) {
        case CslVariant::Base: return "Base";
        case CslVariant::CopperCollector: return "CopperCollector";
        case CslVariant::Complementary: return "Complementary";
        case CslVariant::YIG: return "YIG";
    }
    return "?";
}

const char* to_string(MemtjVariant v) {
    switch (v) {
        case MemtjVariant::Standard: return "Standard";
        case MemtjVariant::CompactSingleDomain: return "CompactSingleDomain";
        case MemtjVariant::Preset: return "Preset";
    }
    return "?";
}

const char* to_string(AnisotropyKind a) {
    return a == AnisotropyKind::PMA ? "PMA" : "InPlane";
}

const char* to_string(Errc e) {
    switch (e) {
        case Errc::InvalidParameter: return "invalid-parameter";
        case Errc::ClassMismatch: return "class-mismatch";
        case Errc::ThermalStability: return "thermal-stability";
        case Errc::NoSwitching: return "no-switching";
        case Errc::NoMotion: return "no-motion";
        case Errc::DegenerateGeometry: return "degenerate-geometry";
        case Errc::SwitchCapExceeded: return "switch-cap-exceeded";
        case Errc::NotPipelinable: return "not-pipelinable";
        case Errc::UnknownMetric: return "unknown-metric";
        case Errc::Parse: return "parse";
        case Errc::Validation: return "validation";
        case Errc::Internal: return "internal";
    }
    return "?";
}

bool is_spintronic(DeviceClass c) {
    switch (c) {
        case DeviceClass::ASL:
        case DeviceClass::CSL:
        case DeviceClass::MLogic:
        case DeviceClass::MEMTJ:
        case DeviceClass::SWD:
        case DeviceClass::CoMET:
            return true;
        default:
            return false;
    }
}

bool is_charge_based(DeviceClass c) { return !is_spintronic(c); }

// ---- parameter validation -------------------------------------------------

double MagnetParams::delta() const {
    return K_u * volume() / (k_B * T);
}

void MagnetParams::validate(const std::string& where) const {
    require(M_s > 0, Errc::Validation, prefixed(where, "M_s must be > 0"));
    require(K_u > 0, Errc::Validation, prefixed(where, "K_u must be > 0"));
    require(alpha > 0 && alpha < 1, Errc::Validation,
            prefixed(where, "alpha must be in (0,1)"));
    require(eta > 0 && eta <= 1, Errc::Validation,
            prefixed(where, "eta must be in (0,1]"));
    require(length > 0 && width > 0 && thickness > 0, Errc::Validation,
            prefixed(where, "magnet dims must be > 0"));
    require(T > 0, Errc::Validation, prefixed(where, "T must be > 0"));
    if (delta() < kThermalStabilityFloor) {
        fail(Errc::ThermalStability,
             prefixed(where, "thermal stability " + std::to_string(delta()) +
                                 " below floor 40"));
    }
}

void SpinChannelParams::validate(const std::string& where) const {
    require(beta > 0 && beta <= 1, Errc::Validation,
            prefixed(where, "beta must be in (0,1]"));
    require(l_sf > 0, Errc::Validation, prefixed(where, "l_sf must be > 0"));
    require(l_c > 0, Errc::Validation, prefixed(where, "l_c must be > 0"));
    require(l_g > 0, Errc::Validation, prefixed(where, "l_g must be > 0"));
    require(rho > 0, Errc::Validation, prefixed(where, "rho must be > 0"));
    require(cross_section > 0, Errc::Validation,
            prefixed(where, "cross_section must be > 0"));
}

void DeviceParams::validate() const {
    const std::string where = "device '" + name + "'";
    require(!name.empty(), Errc::Validation, "device name must be nonempty");
    require(V_dd > 0, Errc::Validation, prefixed(where, "V_dd must be > 0"));
    require(I_on > 0, Errc::Validation, prefixed(where, "I_on must be > 0"));
    require(I_off >= 0 && I_on > I_off, Errc::Validation,
            prefixed(where, "needs I_on > I_off >= 0"));
    require(C_gate > 0, Errc::Validation, prefixed(where, "C_gate must be > 0"));
    require(A_dev > 0, Errc::Validation, prefixed(where, "A_dev must be > 0"));
    require(t_p >= 0, Errc::Validation, prefixed(where, "t_p must be >= 0"));
    if (is_spintronic(cls)) {
        require(magnet.has_value(), Errc::Validation,
                prefixed(where, "spintronic class requires magnet"));
    }
    if (magnet) magnet->validate(where + ": magnet");
    if (channel) channel->validate(where + ": channel");
    if (cls == DeviceClass::ASL || cls == DeviceClass::CSL) {
        require(channel.has_value(), Errc::Validation,
                prefixed(where, "class requires channel"));
    }
}

double DeviceParams::extra(const std::string& key) const {
    auto it = extras.find(key);
    if (it == extras.end()) {
        fail(Errc::InvalidParameter,
             "device '" + name + "' missing extras." + key);
    }
    return it->second;
}

double DeviceParams::extra_or(const std::string& key, double fallback) const {
    auto it = extras.find(key);
    return it == extras.end() ? fallback : it->second;
}

bool DeviceParams::has_extra(const std::string& key) const {
    return extras.count(key) != 0;
}

// ---- charge-device gate model ----------------------------------------------

static GateMetrics charge_gate(const DeviceParams& dev, GateKind kind,
                               int fanout, double ext_load,
                               const GateCostTable& table) {
    require(fanout >= 1, Errc::InvalidParameter, "fanout must be >= 1");
    require(ext_load >= 0, Errc::InvalidParameter, "ext_load must be >= 0");
    require(dev.I_on > 0, Errc::InvalidParameter,
            "device '" + dev.name + "': I_on must be > 0");

    const double k = table.k(kind);
    const double n = table.n(kind);
    const double c_drive = k * dev.C_gate * (1.0 + fanout) + ext_load;

    GateMetrics g;
    g.kind = kind;
    g.t_gate = c_drive * dev.V_dd / dev.I_on + dev.t_p;
    g.E_dyn = c_drive * dev.V_dd * dev.V_dd;
    g.P_leak = n * dev.I_off * dev.V_dd;
    g.A_gate = n * dev.A_dev;
    return g;
}

GateMetrics fet_gate_metrics(const DeviceParams& dev, GateKind kind,
                             int fanout, double ext_load,
                             const GateCostTable& table) {
    const bool ok = dev.cls == DeviceClass::ChargeFET ||
                    dev.cls == DeviceClass::Ferroelectric ||
                    dev.cls == DeviceClass::NDR;
    require(ok, Errc::ClassMismatch,
            "fet_gate_metrics: device '" + dev.name + "' has class " +
                to_string(dev.cls));
    return charge_gate(dev, kind, fanout, ext_load, table);
}

GateMetrics ndr_gate_metrics(const DeviceParams& dev, GateKind kind,
                             double hold_time, int fanout, double ext_load,
                             const GateCostTable& table) {
    require(dev.cls == DeviceClass::NDR, Errc::ClassMismatch,
            "ndr_gate_metrics: device '" + dev.name + "' has class " +
                to_string(dev.cls));
    require(hold_time >= 0, Errc::InvalidParameter, "hold_time must be >= 0");
    // The hold cost is P_leak*hold_time; the gate metrics themselves do
    // not depend on the hold window. While clocked, the complementary
    // supply leaks through one off branch, so P_leak carries no device
    // count.
    GateMetrics g = charge_gate(dev, kind, fanout, ext_load, table);
    g.P_leak = dev.I_off * dev.V_dd;
    return g;
}

// ---- spin transport and magnet dynamics -------------------------------------

double asl_spin_current_density(const SpinChannelParams& ch, double J_c) {
    require(J_c >= 0, Errc::InvalidParameter, "J_c must be >= 0");
    require(ch.l_sf > 0, Errc::InvalidParameter, "l_sf must be > 0");
    require(ch.l_c >= 0, Errc::InvalidParameter, "l_c must be >= 0");
    if (ch.l_g <= 0) {
        fail(Errc::DegenerateGeometry,
             "ground path length must be > 0 (transfer ratio diverges)");
    }
    const double c = ch.l_c / ch.l_sf;
    const double g = ch.l_g / ch.l_sf;
    // sinh(g)/sinh(c+g) = e^-c * (1 - e^-2g)/(1 - e^-2(c+g)), stable for
    // arbitrarily short diffusion lengths.
    const double ratio =
        std::exp(-c) * (-std::expm1(-2.0 * g)) / (-std::expm1(-2.0 * (c + g)));
    return ch.beta * J_c * ratio;
}

double critical_spin_current(const MagnetParams& m) {
    require(m.eta > 0, Errc::InvalidParameter, "eta must be > 0");
    require(m.alpha >= 0, Errc::InvalidParameter, "alpha must be >= 0");
    const double barrier = m.K_u * m.volume(); // = delta * k_B * T
    if (barrier / (k_B * m.T) < kThermalStabilityFloor) {
        fail(Errc::ThermalStability,
             "thermal stability " + std::to_string(m.delta()) + " below floor 40");
    }
    return 4.0 * q_e * m.alpha * barrier / (hbar * m.eta);
}

double magnet_switching_delay(const MagnetParams& m, double I_s, double cap) {
    const double I_c = critical_spin_current(m);
    if (I_s <= I_c) {
        fail(Errc::NoSwitching, "spin current " + std::to_string(I_s * 1e6) +
                                    " uA at or below critical " +
                                    std::to_string(I_c * 1e6) + " uA");
    }
    const double spins = m.M_s * m.volume() / mu_B;
    const double t = q_e * spins / (I_s - I_c);
    if (t > cap) {
        fail(Errc::SwitchCapExceeded,
             "switching delay " + std::to_string(t) + " s beyond cap " +
                 std::to_string(cap) + " s");
    }
    return t;
}

// ---- CSL ---------------------------------------------------------------------

double csl_variant_gain(CslVariant v) {
    switch (v) {
        case CslVariant::Base: return 1.0;
        case CslVariant::CopperCollector: return 2.0;
        case CslVariant::Complementary: return 1.0;
        case CslVariant::YIG: return 2.0 * 1.5;
    }
    return 1.0;
}

double csl_magnet_scale(CslVariant v) {
    switch (v) {
        case CslVariant::Base:
        case CslVariant::CopperCollector:
            return 3.0;
        default:
            return 1.0;
    }
}

double csl_area_factor(CslVariant v) {
    return v == CslVariant::Complementary ? 1.5 : 1.0;
}

MagnetParams csl_write_magnet(const DeviceParams& dev, CslVariant v) {
    require(dev.magnet.has_value(), Errc::ClassMismatch,
            "device '" + dev.name + "' needs magnet");
    MagnetParams m = *dev.magnet;
    m.length *= csl_magnet_scale(v); // footprint grows, thickness fixed
    return m;
}

GateMetrics csl_gate_metrics(const DeviceParams& dev, CslVariant variant,
                             GateKind kind, const GateCostTable& table) {
    require(dev.cls == DeviceClass::CSL, Errc::ClassMismatch,
            "csl_gate_metrics: device '" + dev.name + "' has class " +
                to_string(dev.cls));
    require(dev.magnet.has_value() && dev.channel.has_value(), Errc::ClassMismatch,
            "device '" + dev.name + "' needs magnet and channel");

    const double scale = csl_magnet_scale(variant);
    const MagnetParams m = csl_write_magnet(dev, variant);

    const double derate = dev.extra_or("drive_derate", 1.0);
    const double I_drive = dev.I_on * derate;
    const double I_s = csl_variant_gain(variant) * dev.channel->beta * I_drive;

    const double t_sw = magnet_switching_delay(m, I_s);
    const double R_write = dev.extra("R_write");
    const double C_clock = dev.extra("C_clock");

    GateMetrics g;
    g.kind = kind;
    g.t_gate = t_sw;
    // drive held for the full switching window
    g.E_dyn = I_drive * I_drive * R_write * t_sw + C_clock * dev.V_dd * dev.V_dd;
    g.P_leak = dev.I_off * dev.V_dd;
    g.A_gate = table.n(kind) * dev.A_dev * scale * csl_area_factor(variant);
    return g;
}

// ---- MEMTJ ---------------------------------------------------------------------

double memtj_output_swing(double V_dd, double tmr) {
    return V_dd * tmr / (2.0 + tmr);
}

GateMetrics memtj_gate_metrics(const DeviceParams& dev, MemtjVariant variant,
                               GateKind kind, const GateCostTable& table) {
    require(dev.cls == DeviceClass::MEMTJ, Errc::ClassMismatch,
            "memtj_gate_metrics: device '" + dev.name + "' has class " +
                to_string(dev.cls));
    require(dev.magnet.has_value(), Errc::ClassMismatch,
            "device '" + dev.name + "' needs magnet");

    const double C_ME = dev.extra("C_ME");
    const double V_ME = dev.extra("V_ME");
    const double R_MTJ = dev.extra("R_MTJ");
    const double tmr = dev.extra("TMR");
    const double t_me = dev.extra("t_ME_switch");
    require(tmr > 0, Errc::InvalidParameter,
            "device '" + dev.name + "': TMR must be > 0");

    // Matched pull-up/pull-down junctions: Thevenin resistance R_MTJ/2
    // into the next stage's magnetoelectric cell.
    const double t_read = 0.5 * R_MTJ * C_ME;
    const double E_read = dev.V_dd * dev.V_dd / (2.0 * R_MTJ) * t_read;

    // Standard majority ties three device outputs together, so a driven
    // input sees three ME cells; the single-domain device gates one AFM
    // with all inputs.
    double n_inputs_eff = 1.0;
    if (kind == GateKind::MAJ3 && variant != MemtjVariant::CompactSingleDomain) {
        n_inputs_eff = 3.0;
    }

    double me_events = n_inputs_eff;
    double t_gate = t_me + t_read;
    if (variant == MemtjVariant::Preset) {
        me_events += 1.0; // preset phase switches the cell once more
        t_gate += t_me;
    }

    GateMetrics g;
    g.kind = kind;
    g.t_gate = t_gate;
    g.E_dyn = me_events * C_ME * V_ME * V_ME + E_read;
    g.P_leak = dev.I_off * dev.V_dd;
    g.A_gate = table.n(kind) * dev.A_dev;
    return g;
}

// ---- mLogic --------------------------------------------------------------------

double domain_wall_velocity(double mu_dw, double J, double J_c0) {
    require(mu_dw > 0, Errc::InvalidParameter, "mu_dw must be > 0");
    if (J <= J_c0) {
        fail(Errc::NoMotion, "drive density " + std::to_string(J) +
                                 " A/m^2 at or below depinning " +
                                 std::to_string(J_c0) + " A/m^2");
    }
    return mu_dw * (J - J_c0);
}

GateMetrics mlogic_gate_metrics(const DeviceParams& dev, GateKind kind,
                                const GateCostTable& table) {
    require(dev.cls == DeviceClass::MLogic, Errc::ClassMismatch,
            "mlogic_gate_metrics: device '" + dev.name + "' has class " +
                to_string(dev.cls));
    const double mu_dw = dev.extra("mu_dw");
    const double J_c0 = dev.extra("J_c0");
    const double L_track = dev.extra("L_track");
    const double R_write = dev.extra("R_write");
    const double A_cross = dev.extra("A_track_cross");
    require(A_cross > 0, Errc::InvalidParameter,
            "device '" + dev.name + "': A_track_cross must be > 0");

    const double J = dev.I_on / A_cross;
    const double v = domain_wall_velocity(mu_dw, J, J_c0);
    const double t = L_track / v;

    GateMetrics g;
    g.kind = kind;
    g.t_gate = t;
    g.E_dyn = dev.I_on * dev.I_on * R_write * t + dev.C_gate * dev.V_dd * dev.V_dd;
    g.P_leak = dev.I_off * dev.V_dd;
    g.A_gate = table.n(kind) * dev.A_dev;
    return g;
}

// ---- SWD / CoMET ------------------------------------------------------------------

GateMetrics me_device_metrics(const DeviceParams& dev, DeviceClass kind,
                              GateKind gate, const GateCostTable& table) {
    require(kind == DeviceClass::SWD || kind == DeviceClass::CoMET,
            Errc::InvalidParameter, "kind must be SWD or CoMET");
    require(dev.cls == kind, Errc::ClassMismatch,
            "me_device_metrics: device '" + dev.name + "' has class " +
                to_string(dev.cls) + ", expected " + to_string(kind));

    GateMetrics g;
    g.kind = gate;
    g.A_gate = table.n(gate) * dev.A_dev;
    g.P_leak = dev.I_off * dev.V_dd;

    if (kind == DeviceClass::SWD) {
        const double t_settle = dev.extra("t_metastable_settle");
        const double t_prop = dev.extra("t_wave_prop");
        const double C_ME = dev.extra("C_ME");
        const double V_ME = dev.extra("V_ME");
        const double E_clock = dev.extra("E_clock");
        const double n_cells = dev.extra("n_cells_per_clock_driver");
        require(n_cells >= 1, Errc::InvalidParameter,
                "n_cells_per_clock_driver must be >= 1");
        g.t_gate = t_settle + t_prop;
        g.E_dyn = C_ME * V_ME * V_ME + E_clock / n_cells;
    } else {
        const double t_nuc = dev.extra("t_nucleation");
        const double L_prop = dev.extra("L_prop");
        const double v_dw = dev.extra("v_DW");
        const double E_tr = dev.extra("E_transistor");
        const double E_joule = dev.extra("E_joule");
        const double P_leak_inv = dev.extra("P_leak_inv");
        require(v_dw > 0, Errc::InvalidParameter, "v_DW must be > 0");
        g.t_gate = t_nuc + L_prop / v_dw;
        // the driving inverter's leakage over the gate's own window is
        // part of the per-evaluation energy, not of P_leak (which would
        // bill it again over the word latency)
        g.E_dyn = E_tr + E_joule + P_leak_inv * g.t_gate;
    }
    return g;
}

// ---- ASL ----------------------------------------------------------------------------

GateMetrics asl_gate_metrics(const DeviceParams& dev, GateKind kind,
                             const GateCostTable& table) {
    require(dev.cls == DeviceClass::ASL, Errc::ClassMismatch,
            "asl_gate_metrics: device '" + dev.name + "' has class " +
                to_string(dev.cls));
    require(dev.magnet.has_value() && dev.channel.has_value(), Errc::ClassMismatch,
            "device '" + dev.name + "' needs magnet and channel");

    const SpinChannelParams& ch = *dev.channel;
    const double J_c = dev.I_on / ch.cross_section;
    const double I_s = asl_spin_current_density(ch, J_c) * ch.cross_section;
    const double t_sw = magnet_switching_delay(*dev.magnet, I_s);

    GateMetrics g;
    g.kind = kind;
    g.t_gate = t_sw;
    g.E_dyn = dev.I_on * dev.I_on * ch.channel_resistance() * t_sw +
              dev.C_gate * dev.V_dd * dev.V_dd;
    g.P_leak = dev.I_off * dev.V_dd;
    g.A_gate = table.n(kind) * dev.A_dev;
    return g;
}

// ---- dispatch ----------------------------------------------------------------------

GateMetrics device_gate_metrics(const DeviceParams& dev, GateKind kind,
                                int fanout, double ext_load,
                                const GateCostTable& table) {
    switch (dev.cls) {
        case DeviceClass::ChargeFET:
        case DeviceClass::Ferroelectric:
            return fet_gate_metrics(dev, kind, fanout, ext_load, table);
        case DeviceClass::NDR:
            return ndr_gate_metrics(dev, kind, 0.0, fanout, ext_load, table);
        case DeviceClass::ASL:
            return asl_gate_metrics(dev, kind, table);
        case DeviceClass::CSL:
            return csl_gate_metrics(dev, dev.csl_variant, kind, table);
        case DeviceClass::MLogic:
            return mlogic_gate_metrics(dev, kind, table);
        case DeviceClass::MEMTJ:
            return memtj_gate_metrics(dev, dev.memtj_variant, kind, table);
        case DeviceClass::SWD:
        case DeviceClass::CoMET:
            return me_device_metrics(dev, dev.cls, kind, table);
    }
    fail(Errc::Internal, "unhandled device class");
}

double intrinsic_delay(const DeviceParams& dev, const GateCostTable& table) {
    return device_gate_metrics(dev, GateKind::INV, 1, 0.0, table).t_gate;
}

} // namespace xcmos
