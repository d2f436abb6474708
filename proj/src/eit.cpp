#include "fwm/eit.hpp"

#include <algorithm>

namespace fwm {

void LambdaParams::validate() const
{
    if (!(gamma_e > 0)) throw domain_error("LambdaParams: gamma_e must be > 0");
    if (rabi_c < 0) throw domain_error("LambdaParams: rabi_c must be >= 0");
    if (!(chi_scale > 0)) throw domain_error("LambdaParams: chi_scale must be > 0");
}

cd susceptibility(const LambdaParams& lp, double delta2)
{
    lp.validate();
    const cd I(0, 1);
    const cd gd = lp.gamma_g + I * delta2;
    const cd den = 2.0 * gd * (2.0 * (delta2 - lp.delta1) - I * lp.gamma_e)
                   - I * lp.rabi_c * lp.rabi_c;
    if (std::abs(den) < 1e-15)
        throw pole_error("susceptibility: vanishing denominator", delta2);
    return lp.chi_scale * 2.0 * gd / den;
}

double transparency_window(const LambdaParams& lp)
{
    if (!(lp.gamma_e > 0)) throw domain_error("transparency_window: gamma_e must be > 0");
    return std::sqrt(2 * lp.gamma_g / lp.gamma_e) * lp.rabi_c;
}

NoiseSpectrum absorption_spectrum(const LambdaParams& lp, const std::vector<double>& grid)
{
    if (grid.empty())
        throw domain_error("absorption_spectrum: empty grid");
    NoiseSpectrum s;
    s.label = "Im chi";
    s.freqs = grid;
    s.values.reserve(grid.size());
    for (double d : grid)
        s.values.push_back(susceptibility(lp, d).imag());
    return s;
}

double peak_separation(const LambdaParams& lp, const std::vector<double>& grid)
{
    const auto s = absorption_spectrum(lp, grid);
    const auto& y = s.values;
    std::vector<std::pair<double, double>> peaks;  // (height, position)
    for (size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] > y[i - 1] && y[i] >= y[i + 1]) {
            // vertex of the parabola through the three samples (uniform spacing)
            const double h = grid[i + 1] - grid[i];
            const double c = y[i - 1] - 2 * y[i] + y[i + 1];
            const double off = c != 0 ? 0.5 * h * (y[i - 1] - y[i + 1]) / c : 0.0;
            peaks.emplace_back(y[i], grid[i] + off);
        }
    }
    if (peaks.size() < 2) return 0.0;
    std::partial_sort(peaks.begin(), peaks.begin() + 2, peaks.end(),
                      [](auto& a, auto& b) { return a.first > b.first; });
    return std::abs(peaks[0].second - peaks[1].second);
}

} // namespace fwm
