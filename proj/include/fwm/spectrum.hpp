#ifndef FWM_SPECTRUM_HPP
#define FWM_SPECTRUM_HPP

#include <string>
#include <vector>

namespace fwm {

// A sampled real quantity versus frequency (rad/us). SQL = 1 for noise.
struct NoiseSpectrum {
    std::vector<double> freqs;
    std::vector<double> values;
    std::string label;
};

} // namespace fwm

#endif
