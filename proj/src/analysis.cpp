#include "becavity/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace becavity {

SampledTrace moving_average(const SampledTrace& trace, double window) {
    if (trace.dt <= 0) throw ValidationError("moving_average: trace needs dt > 0");
    if (window < trace.dt) throw ValidationError("moving_average: window smaller than bin width");
    const long m = std::lround(window / trace.dt);
    if (std::abs(m * trace.dt - window) > 1e-9 * window)
        throw ValidationError("moving_average: window must be a multiple of the bin width");

    const long n = static_cast<long>(trace.values.size());
    const long left = (m - 1) / 2;
    const long right = m - 1 - left;
    SampledTrace out = trace;
    // prefix sums; edge windows shrink to the valid range
    std::vector<double> prefix(n + 1, 0.0);
    for (long i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + trace.values[i];
    for (long i = 0; i < n; ++i) {
        const long a = std::max(0L, i - left);
        const long b = std::min(n - 1, i + right);
        out.values[i] = (prefix[b + 1] - prefix[a]) / static_cast<double>(b - a + 1);
    }
    return out;
}

std::vector<double> detect_peaks(const SampledTrace& smoothed, const PeakOptions& opt) {
    const auto& v = smoothed.values;
    const long n = static_cast<long>(v.size());
    if (n < 3) throw ValidationError("detect_peaks: trace length must be >= 3");
    const double vmax = *std::max_element(v.begin(), v.end());
    const double prominence = opt.min_prominence_frac * vmax;

    // candidate local maxima; plateaus keep their first sample
    std::vector<long> cand;
    for (long i = 1; i + 1 < n; ++i) {
        if (v[i] > v[i - 1] && v[i] >= v[i + 1]) {
            // prominence against the higher of the two flanking minima,
            // walking until a taller sample bounds the peak
            double left_min = v[i];
            for (long l = i; l > 0 && v[l - 1] <= v[i]; --l) left_min = std::min(left_min, v[l - 1]);
            double right_min = v[i];
            for (long r = i; r + 1 < n && v[r + 1] <= v[i]; ++r)
                right_min = std::min(right_min, v[r + 1]);
            if (v[i] - std::max(left_min, right_min) >= prominence) cand.push_back(i);
        }
    }

    // enforce the minimum separation, taller peaks win, earlier on ties
    std::vector<long> order(cand.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](long a, long b) {
        return v[cand[a]] > v[cand[b]];
    });
    const double sep = opt.min_separation;
    std::vector<long> kept;
    for (long oi : order) {
        const long idx = cand[oi];
        bool ok = true;
        for (long kj : kept)
            if (std::abs(idx - kj) * smoothed.dt < sep) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    std::vector<double> times;
    times.reserve(kept.size());
    for (long idx : kept) times.push_back(smoothed.time_at(static_cast<std::size_t>(idx)));
    return times;
}

std::vector<FrequencyBin> instantaneous_frequency(const std::vector<double>& peaks, double bin) {
    std::vector<FrequencyBin> out;
    if (peaks.size() < 2 || bin <= 0) return out;
    const double t_ref = peaks.front();
    const std::size_t n_iv = peaks.size() - 1;
    const double span = peaks.back() - t_ref;
    const std::size_t n_bins = static_cast<std::size_t>(std::ceil(span / bin));

    std::vector<double> sum(n_bins, 0.0), sumsq(n_bins, 0.0);
    std::vector<std::size_t> count(n_bins, 0);
    for (std::size_t i = 0; i < n_iv; ++i) {
        const double interval = peaks[i + 1] - peaks[i];
        const double mid = 0.5 * (peaks[i] + peaks[i + 1]) - t_ref;
        const auto b = static_cast<std::size_t>(mid / bin);
        if (b >= n_bins) continue;
        sum[b] += interval;
        sumsq[b] += interval * interval;
        ++count[b];
    }
    for (std::size_t b = 0; b < n_bins; ++b) {
        FrequencyBin fb;
        fb.t_center = (static_cast<double>(b) + 0.5) * bin;
        fb.n_intervals = count[b];
        if (count[b] == 0) {
            fb.defined = false;
            fb.frequency = std::numeric_limits<double>::quiet_NaN();
            fb.stderr_hz = std::numeric_limits<double>::quiet_NaN();
        } else {
            const double mean = sum[b] / static_cast<double>(count[b]);
            fb.frequency = 1.0 / mean;
            fb.defined = true;
            if (count[b] >= 2) {
                const double var =
                    (sumsq[b] - sum[b] * sum[b] / static_cast<double>(count[b])) /
                    static_cast<double>(count[b] - 1);
                const double sd = std::sqrt(std::max(0.0, var));
                // delta method: sigma_f = sigma_T / (T^2 sqrt(n))
                fb.stderr_hz = sd / (mean * mean * std::sqrt(static_cast<double>(count[b])));
            } else {
                fb.stderr_hz = 0.0;
            }
        }
        out.push_back(fb);
    }
    return out;
}

} // namespace becavity
