#pragma once

#include <stdexcept>
#include <string>

namespace gaitplan {

enum class errc {
    invalid_input,
    range,
    geometry,
    singularity,
    no_root,
    insufficient_data,
    singular_fit,
    io,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace gaitplan
