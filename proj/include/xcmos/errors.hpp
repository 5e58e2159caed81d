#pragma once

#include <stdexcept>
#include <string>

namespace xcmos {

/// Classified failure modes surfaced by the modeling and I/O layers.
enum class Errc {
    InvalidParameter,   // value outside a model's domain
    ClassMismatch,      // operation applied to the wrong device class
    ThermalStability,   // magnet retention barrier below the floor
    NoSwitching,        // spin drive at or below the critical current
    NoMotion,           // domain-wall drive at or below the depinning density
    DegenerateGeometry, // channel geometry with a diverging transfer function
    SwitchCapExceeded,  // switching delay beyond the configured cap
    NotPipelinable,     // circuit style without intrinsic latching
    UnknownMetric,      // plot/CSV request for a metric no row carries
    Parse,              // malformed input file
    Validation,         // well-formed input violating an invariant
    Internal,
};

const char* to_string(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace xcmos
