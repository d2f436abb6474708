#ifndef FWM_ERRORS_HPP
#define FWM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fwm {

// Base of everything the library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : error { using error::error; };
struct numeric_error : error { using error::error; };
struct degenerate_model_error : error { using error::error; };
struct domain_error : error { using error::error; };
struct config_error : error { using error::error; };
struct normalization_error : error { using error::error; };
struct calibration_error : error { using error::error; };

// Thrown when M1'(omega) is (numerically) singular. Carries the frequency.
struct pole_error : error {
    double omega;
    pole_error(const std::string& what, double w) : error(what), omega(w) {}
};

} // namespace fwm

#endif
