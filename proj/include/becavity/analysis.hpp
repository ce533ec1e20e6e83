#ifndef BECAVITY_ANALYSIS_HPP_
#define BECAVITY_ANALYSIS_HPP_

#include <cstddef>
#include <vector>

#include "becavity/params.hpp"

namespace becavity {

// Uniformly sampled trace, either photon numbers or detector counts.
struct SampledTrace {
    double t0 = 0;          // time of the first sample
    double dt = 0;          // sample spacing
    std::vector<double> values;

    double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
};

// Centered boxcar mean over a window that is a multiple of the sample
// spacing; edge samples use shrunken windows.
SampledTrace moving_average(const SampledTrace& trace, double window);

struct PeakOptions {
    double min_prominence_frac = 0.25; // of the trace maximum
    double min_separation = 10e-6;     // s
};

// Local maxima whose prominence (height above the higher of the two
// flanking minima) exceeds the threshold, thinned to the minimum
// separation, taller peaks first; equal heights keep the earlier peak.
std::vector<double> detect_peaks(const SampledTrace& smoothed, const PeakOptions& opt = {});

struct FrequencyBin {
    double t_center = 0;   // relative to the first peak
    double frequency = 0;  // Hz; NaN when undefined
    std::size_t n_intervals = 0;
    double stderr_hz = 0;
    bool defined = false;
};

// Per time bin (referenced to the first detected peak), the reciprocal mean
// of the inter-peak intervals whose midpoints fall inside the bin. Bins
// without intervals are reported undefined, never zero.
std::vector<FrequencyBin> instantaneous_frequency(const std::vector<double>& peak_times,
                                                  double bin = 50e-6);

} // namespace becavity

#endif
