#include "becavity/detector.hpp"

#include <cmath>
#include <random>

namespace becavity {

namespace {

// Inversion-by-search Poisson sampler. Implementation-defined library
// distributions would break byte-identical reruns across toolchains, so the
// draw is pinned here. Expected counts per 2 us bin stay below ~40 even at
// the dead-time cap, where the linear search is fine.
std::uint64_t draw_poisson(double lambda, std::mt19937_64& rng) {
    if (lambda <= 0.0) return 0;
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    // split large means to keep exp(-lambda) representable
    std::uint64_t total = 0;
    while (lambda > 500.0) {
        // Poisson(500) by the same inversion, summed
        double u = uni(rng);
        double p = std::exp(-500.0);
        double cdf = p;
        std::uint64_t k = 0;
        while (u > cdf && k < 5000) {
            ++k;
            p *= 500.0 / static_cast<double>(k);
            cdf += p;
        }
        total += k;
        lambda -= 500.0;
    }
    double u = uni(rng);
    double p = std::exp(-lambda);
    double cdf = p;
    std::uint64_t k = 0;
    while (u > cdf && k < 5000) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cdf += p;
    }
    return total + k;
}

} // namespace

TransmissionTrace transmission_counts(const SampledTrace& photons, const DetectorModel& det) {
    if (photons.dt <= 0) throw ValidationError("transmission_counts: need dt > 0");
    const long per_bin = std::lround(det.bin / photons.dt);
    if (per_bin < 1 || std::abs(per_bin * photons.dt - det.bin) > 1e-9 * det.bin)
        throw ValidationError("transmission_counts: bin must be a multiple of the sample interval");

    TransmissionTrace trace;
    trace.t0 = photons.t0;
    trace.bin = det.bin;
    trace.seed = det.seed;

    const long n = static_cast<long>(photons.values.size());
    const long n_bins = (n - 1) / per_bin; // trapezoid needs the closing sample
    std::mt19937_64 rng(det.seed);
    trace.counts.reserve(static_cast<std::size_t>(std::max(0L, n_bins)));
    for (long b = 0; b < n_bins; ++b) {
        double expected = 0.0;
        const long a = b * per_bin;
        for (long i = 0; i < per_bin; ++i) {
            const double r0 = det.detected_rate(photons.values[a + i]);
            const double r1 = det.detected_rate(photons.values[a + i + 1]);
            expected += 0.5 * (r0 + r1) * photons.dt;
        }
        trace.counts.push_back(draw_poisson(expected, rng));
    }
    return trace;
}

} // namespace becavity
