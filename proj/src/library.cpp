#include "xcmos/library.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace xcmos {

namespace {

using nlohmann::json;

void require(bool ok, Errc code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

DeviceClass device_class_from_string(const std::string& s, const std::string& where) {
    if (s == "ChargeFET") return DeviceClass::ChargeFET;
    if (s == "Ferroelectric") return DeviceClass::Ferroelectric;
    if (s == "NDR") return DeviceClass::NDR;
    if (s == "ASL") return DeviceClass::ASL;
    if (s == "CSL") return DeviceClass::CSL;
    if (s == "mLogic") return DeviceClass::MLogic;
    if (s == "MEMTJ") return DeviceClass::MEMTJ;
    if (s == "SWD") return DeviceClass::SWD;
    if (s == "CoMET") return DeviceClass::CoMET;
    fail(Errc::Validation, where + ": unknown device class '" + s + "'");
}

CslVariant csl_variant_from_string(const std::string& s, const std::string& where) {
    if (s == "Base") return CslVariant::Base;
    if (s == "CopperCollector") return CslVariant::CopperCollector;
    if (s == "Complementary") return CslVariant::Complementary;
    if (s == "YIG") return CslVariant::YIG;
    fail(Errc::Validation, where + ": unknown CSL variant '" + s + "'");
}

MemtjVariant memtj_variant_from_string(const std::string& s,
                                       const std::string& where) {
    if (s == "Standard") return MemtjVariant::Standard;
    if (s == "CompactSingleDomain") return MemtjVariant::CompactSingleDomain;
    if (s == "Preset") return MemtjVariant::Preset;
    fail(Errc::Validation, where + ": unknown MEMTJ variant '" + s + "'");
}

bool is_provenance_key(const std::string& key) {
    const std::string suffix = "_provenance";
    return key.size() > suffix.size() &&
           key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string provenance_base(const std::string& key) {
    return key.substr(0, key.size() - std::string("_provenance").size());
}

/// Every numeric (or dims-array) field needs a provenance sibling with
/// a recognized value; stale provenance tags are unknown keys.
void check_provenance(const json& obj, const std::string& where,
                      const std::string& prefix,
                      std::map<std::string, std::string>& out) {
    for (const auto& [key, value] : obj.items()) {
        if (is_provenance_key(key)) {
            const std::string base = provenance_base(key);
            require(obj.contains(base), Errc::Validation,
                    where + ": provenance tag '" + key + "' has no field");
            require(value.is_string(), Errc::Validation,
                    where + ": '" + key + "' must be a string");
            const std::string v = value.get<std::string>();
            require(v == "paper" || v == "placeholder", Errc::Validation,
                    where + ": '" + key + "' must be 'paper' or 'placeholder'");
            out[prefix + base] = v;
            continue;
        }
        const bool needs_tag =
            value.is_number() || (key == "dims" && value.is_array());
        if (needs_tag) {
            require(obj.contains(key + "_provenance"), Errc::Validation,
                    where + ": numeric field '" + key +
                        "' needs a '" + key + "_provenance' tag");
        }
    }
}

void check_known_keys(const json& obj, const std::set<std::string>& allowed,
                      const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        const std::string base = is_provenance_key(key) ? provenance_base(key) : key;
        require(allowed.count(base) != 0, Errc::Validation,
                where + ": unknown key '" + key + "'");
    }
}

double get_number(const json& obj, const std::string& key, const std::string& where) {
    require(obj.contains(key), Errc::Validation,
            where + ": missing field '" + key + "'");
    require(obj[key].is_number(), Errc::Validation,
            where + ": field '" + key + "' must be a number");
    return obj[key].get<double>();
}

MagnetParams parse_magnet(const json& j, const std::string& where) {
    static const std::set<std::string> allowed{
        "M_s", "K_u", "alpha", "eta", "dims", "T", "anisotropy_kind"};
    check_known_keys(j, allowed, where);
    MagnetParams m;
    m.M_s = get_number(j, "M_s", where);
    m.K_u = get_number(j, "K_u", where);
    m.alpha = get_number(j, "alpha", where);
    m.eta = get_number(j, "eta", where);
    require(j.contains("dims") && j["dims"].is_array() && j["dims"].size() == 3,
            Errc::Validation, where + ": 'dims' must be [length,width,thickness]");
    m.length = j["dims"][0].get<double>();
    m.width = j["dims"][1].get<double>();
    m.thickness = j["dims"][2].get<double>();
    m.T = get_number(j, "T", where);
    if (j.contains("anisotropy_kind")) {
        const std::string a = j["anisotropy_kind"].get<std::string>();
        require(a == "InPlane" || a == "PMA", Errc::Validation,
                where + ": anisotropy_kind must be 'InPlane' or 'PMA'");
        m.anisotropy_kind =
            a == "PMA" ? AnisotropyKind::PMA : AnisotropyKind::InPlane;
    }
    return m;
}

SpinChannelParams parse_channel(const json& j, const std::string& where) {
    static const std::set<std::string> allowed{"beta", "l_sf",  "l_c",
                                               "l_g",  "rho", "cross_section"};
    check_known_keys(j, allowed, where);
    SpinChannelParams ch;
    ch.beta = get_number(j, "beta", where);
    ch.l_sf = get_number(j, "l_sf", where);
    ch.l_c = get_number(j, "l_c", where);
    ch.l_g = get_number(j, "l_g", where);
    ch.rho = get_number(j, "rho", where);
    ch.cross_section = get_number(j, "cross_section", where);
    return ch;
}

DeviceParams parse_device(const json& j, std::map<std::string, std::string>& prov) {
    require(j.is_object(), Errc::Validation, "device entries must be objects");
    require(j.contains("name") && j["name"].is_string(), Errc::Validation,
            "every device needs a string 'name'");
    const std::string name = j["name"].get<std::string>();
    const std::string where = "device '" + name + "'";

    static const std::set<std::string> allowed{
        "name",  "class", "variant", "V_dd",    "I_on",  "I_off",
        "C_gate", "A_dev", "t_p",     "magnet",  "channel", "extras"};
    check_known_keys(j, allowed, where);
    check_provenance(j, where, name + ".", prov);

    DeviceParams d;
    d.name = name;
    require(j.contains("class"), Errc::Validation, where + ": missing 'class'");
    d.cls = device_class_from_string(j["class"].get<std::string>(), where);
    d.V_dd = get_number(j, "V_dd", where);
    d.I_on = get_number(j, "I_on", where);
    d.I_off = get_number(j, "I_off", where);
    d.C_gate = get_number(j, "C_gate", where);
    d.A_dev = get_number(j, "A_dev", where);
    d.t_p = j.contains("t_p") ? get_number(j, "t_p", where) : 0.0;

    if (j.contains("variant")) {
        const std::string v = j["variant"].get<std::string>();
        if (d.cls == DeviceClass::CSL) {
            d.csl_variant = csl_variant_from_string(v, where);
        } else if (d.cls == DeviceClass::MEMTJ) {
            d.memtj_variant = memtj_variant_from_string(v, where);
        } else {
            fail(Errc::Validation,
                 where + ": 'variant' only applies to CSL and MEMTJ devices");
        }
    }

    if (j.contains("magnet")) {
        const std::string mwhere = where + ": magnet";
        check_provenance(j["magnet"], mwhere, name + ".magnet.", prov);
        d.magnet = parse_magnet(j["magnet"], mwhere);
    }
    if (j.contains("channel")) {
        const std::string cwhere = where + ": channel";
        check_provenance(j["channel"], cwhere, name + ".channel.", prov);
        d.channel = parse_channel(j["channel"], cwhere);
    }
    if (j.contains("extras")) {
        const json& ex = j["extras"];
        require(ex.is_object(), Errc::Validation, where + ": extras must be an object");
        const std::string ewhere = where + ": extras";
        check_provenance(ex, ewhere, name + ".extras.", prov);
        for (const auto& [key, value] : ex.items()) {
            if (is_provenance_key(key)) continue;
            require(value.is_number(), Errc::Validation,
                    ewhere + ": '" + key + "' must be a number");
            d.extras[key] = value.get<double>();
        }
    }
    return d;
}

} // namespace

const DeviceParams* DeviceLibrary::find(const std::string& name) const {
    for (const auto& d : devices) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

DeviceLibrary parse_device_library(const std::string& json_text,
                                   const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(Errc::Parse, "library '" + origin + "': " + e.what());
    }
    require(j.is_object(), Errc::Validation,
            "library '" + origin + "': top level must be an object");
    static const std::set<std::string> top_allowed{"devices", "interconnect"};
    check_known_keys(j, top_allowed, "library '" + origin + "'");
    require(j.contains("devices") && j["devices"].is_array(), Errc::Validation,
            "library '" + origin + "': needs a 'devices' array");

    DeviceLibrary lib;
    std::set<std::string> names;
    for (const auto& entry : j["devices"]) {
        DeviceParams d = parse_device(entry, lib.provenance);
        require(names.insert(d.name).second, Errc::Validation,
                "duplicate device name '" + d.name + "'");
        d.validate();
        lib.devices.push_back(std::move(d));
    }

    if (j.contains("interconnect")) {
        const json& ic = j["interconnect"];
        const std::string where = "interconnect";
        static const std::set<std::string> ic_allowed{"r_w", "c_w", "R0",
                                                      "C0",  "t_p", "V_dd"};
        check_known_keys(ic, ic_allowed, where);
        check_provenance(ic, where, "interconnect.", lib.provenance);
        lib.wire.r_w = get_number(ic, "r_w", where);
        lib.wire.c_w = get_number(ic, "c_w", where);
        lib.wire.validate(where);
        if (ic.contains("R0")) {
            lib.default_repeater.R0 = get_number(ic, "R0", where);
            lib.default_repeater.C0 = get_number(ic, "C0", where);
            lib.default_repeater.V_dd = get_number(ic, "V_dd", where);
            lib.default_repeater.t_p =
                ic.contains("t_p") ? get_number(ic, "t_p", where) : 0.0;
            lib.default_repeater.validate(where);
            lib.has_default_repeater = true;
        }
    }
    return lib;
}

DeviceLibrary load_device_library(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::Parse, "cannot open library file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    require(!buf.str().empty(), Errc::Parse, "library file '" + path + "' is empty");
    return parse_device_library(buf.str(), path);
}

RepeaterParams repeater_for_device(const DeviceParams& dev) {
    RepeaterParams r;
    r.R0 = dev.V_dd / dev.I_on;
    r.C0 = dev.C_gate;
    r.V_dd = dev.V_dd;
    r.t_p = is_spintronic(dev.cls) ? intrinsic_delay(dev) : dev.t_p;
    return r;
}

} // namespace xcmos
