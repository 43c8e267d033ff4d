// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mwr {

enum class Errc {
    invalid_parameter,
    out_of_range,      // Doppler not realizable at this geometry
    evanescent_order,  // no propagating diffraction solution
    parse,
    config,
    aliasing,
    invalid_window,
    invalid_grid,
    invalid_input,
    io,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace mwr
