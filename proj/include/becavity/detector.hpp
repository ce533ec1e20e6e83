#ifndef BECAVITY_DETECTOR_HPP_
#define BECAVITY_DETECTOR_HPP_

#include <cstdint>
#include <vector>

#include "becavity/analysis.hpp"

namespace becavity {

// Single-photon counter with a non-paralyzable dead time: detected rate
// r_det = r / (1 + r * tau) for an instantaneous rate r, capped at 1/tau.
struct DetectorModel {
    double rate_per_photon = 0.8e6; // counts/s per intracavity photon
    double dead_time = 50e-9;       // s
    double bin = 2e-6;              // s
    std::uint64_t seed = 12345;

    double detected_rate(double photons) const {
        const double r = rate_per_photon * photons;
        return r / (1.0 + r * dead_time);
    }
};

// Time-binned photon counts with seed provenance.
struct TransmissionTrace {
    double t0 = 0;
    double bin = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t seed = 0;

    SampledTrace as_sampled() const {
        SampledTrace s;
        s.t0 = t0;
        s.dt = bin;
        s.values.assign(counts.begin(), counts.end());
        return s;
    }
};

// Poisson counts per bin: the expected count integrates the dead-time
// limited rate over the bin (trapezoid over the samples); the realized
// counts are drawn with the model's seed and reproduce bit-for-bit.
TransmissionTrace transmission_counts(const SampledTrace& photons, const DetectorModel& det);

} // namespace becavity

#endif
