// Monte Carlo outage estimation over an SNR grid and diversity-slope fitting.
//
// Determinism contract: every trial derives its own generator substream from
// (master_seed, snr_db bits, trial index), so event counts are bit-identical
// for any partitioning of trials across worker threads.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "icr/types.hpp"

namespace icr {

enum class Scheme { CF, DF, FD_AF, HD_AF };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct SweepConfig {
    Scheme scheme = Scheme::DF;
    ChannelExponents exponents{1.0, 1.0, 1.0};
    MultiplexingGains gains{0.0, 0.0};
    std::vector<double> snr_grid_db;  // strictly increasing, >= 3 points
    long trials_per_point = 100000;
    std::uint64_t master_seed = 1;

    void validate() const;  // throws std::invalid_argument
};

struct OutagePoint {
    double snr_db = 0.0;
    double p_hat = 0.0;
    long events = 0;
    long trials = 0;
    double ci_low = 0.0;   // 95% Wilson interval
    double ci_high = 0.0;
};

struct SlopeEstimate {
    double d_hat = 0.0;
    double stderr_ = 0.0;
    int points_used = 0;
};

// Number of worker threads: explicit request, else ICR_DMT_THREADS, else
// hardware concurrency.
int effective_thread_count(int requested);

// Runs cfg.trials_per_point independent trials at one SNR (two block draws
// per trial for FD-AF) and counts outage verdicts.
OutagePoint estimate_outage(const SweepConfig& cfg, double snr_db, int threads = 0);

// estimate_outage at every grid point; optional per-point progress lines.
std::vector<OutagePoint> run_sweep(const SweepConfig& cfg, int threads = 0,
                                   std::ostream* progress = nullptr);

// Weighted least-squares fit of -log10(p_hat) against log10(rho).  Points
// with fewer than event_floor outage events are excluded; fewer than two
// usable points throws InsufficientData.
SlopeEstimate estimate_diversity(std::span<const OutagePoint> points, long event_floor = 20);

// Closed-form DMT of the scheme, for slope comparisons.
double closed_form_dmt(Scheme scheme, const MultiplexingGains& g, const ChannelExponents& e);

}  // namespace icr
