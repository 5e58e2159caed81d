#pragma once

#include <map>
#include <string>
#include <vector>

#include "xcmos/device_models.hpp"
#include "xcmos/interconnect.hpp"

namespace xcmos {

/// A validated technology library: devices plus shared wire parameters.
/// Every numeric field in the JSON file carries a sibling
/// "<field>_provenance" tag ("paper" or "placeholder"); tags are kept
/// here keyed by "<device>.<field>" (or "interconnect.<field>").
struct DeviceLibrary {
    std::vector<DeviceParams> devices;
    WireParams wire{};
    RepeaterParams default_repeater{}; // optional library-wide defaults
    bool has_default_repeater = false;
    std::map<std::string, std::string> provenance;

    const DeviceParams* find(const std::string& name) const;
};

/// Load and eagerly validate a JSON device library. Unknown keys are
/// rejected; malformed JSON throws Errc::Parse, invariant violations
/// Errc::Validation naming the device and field.
DeviceLibrary load_device_library(const std::string& path);

DeviceLibrary parse_device_library(const std::string& json_text,
                                   const std::string& origin = "<string>");

/// Interconnect repeater parameters for a device: R0 = V_dd/I_on,
/// C0 = C_gate; the fixed per-repeater delay is the polarization time
/// for ferroelectric FETs and the intrinsic switching delay for
/// spintronic repeaters.
RepeaterParams repeater_for_device(const DeviceParams& dev);

} // namespace xcmos
