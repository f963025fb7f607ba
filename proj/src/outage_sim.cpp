#include "icr/outage_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "icr/dmt_formulas.hpp"
#include "icr/rate_regions.hpp"
#include "icr/rng.hpp"

namespace icr {

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::CF: return "cf";
        case Scheme::DF: return "df";
        case Scheme::FD_AF: return "fd_af";
        case Scheme::HD_AF: return "hd_af";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "cf" || name == "CF") return Scheme::CF;
    if (name == "df" || name == "DF") return Scheme::DF;
    if (name == "fd_af" || name == "FD_AF") return Scheme::FD_AF;
    if (name == "hd_af" || name == "HD_AF") return Scheme::HD_AF;
    throw std::invalid_argument("unknown scheme: " + name + " (cf|df|fd_af|hd_af)");
}

void SweepConfig::validate() const {
    if (snr_grid_db.size() < 3) {
        throw std::invalid_argument("SNR grid needs at least 3 points");
    }
    for (std::size_t i = 1; i < snr_grid_db.size(); ++i) {
        if (!(snr_grid_db[i] > snr_grid_db[i - 1])) {
            throw std::invalid_argument("SNR grid must be strictly increasing");
        }
    }
    if (trials_per_point < 1000) {
        throw std::invalid_argument("trials_per_point must be >= 1000");
    }
    if ((scheme == Scheme::FD_AF || scheme == Scheme::HD_AF) && exponents.gamma != 1.0) {
        throw GammaUnsupported(exponents.gamma);
    }
}

int effective_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ICR_DMT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// 95% Wilson score interval.
void wilson_interval(long events, long trials, double& lo, double& hi) {
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(events) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

long count_outages(const SweepConfig& cfg, const SnrPoint& snr, double snr_db, long begin,
                   long end) {
    const TargetRates targets = TargetRates::for_gains(cfg.gains, snr);
    const auto snr_key = std::bit_cast<std::uint64_t>(snr_db);
    long events = 0;
    for (long i = begin; i < end; ++i) {
        Rng rng = Rng::from_key(cfg.master_seed, {snr_key, static_cast<std::uint64_t>(i)});
        bool hit = false;
        switch (cfg.scheme) {
            case Scheme::CF: {
                const FadingDraw d = draw_fading(rng);
                hit = cf_outage(d, snr, cfg.exponents, targets).in_outage;
                break;
            }
            case Scheme::DF: {
                const FadingDraw d = draw_fading(rng);
                hit = df_outage(d, snr, cfg.exponents, targets).in_outage;
                break;
            }
            case Scheme::FD_AF: {
                const FadingDraw db = draw_fading(rng);
                const FadingDraw db1 = draw_fading(rng);
                hit = fd_af_outage(fading_to_exponents(db, snr), fading_to_exponents(db1, snr),
                                   cfg.exponents, cfg.gains)
                          .in_outage;
                break;
            }
            case Scheme::HD_AF: {
                const FadingDraw d = draw_fading(rng);
                hit = hd_af_outage(fading_to_exponents(d, snr), cfg.exponents, cfg.gains)
                          .in_outage;
                break;
            }
        }
        if (hit) ++events;
    }
    return events;
}

}  // namespace

OutagePoint estimate_outage(const SweepConfig& cfg, double snr_db, int threads) {
    cfg.validate();
    const SnrPoint snr(std::pow(10.0, snr_db / 10.0));
    const long trials = cfg.trials_per_point;
    const int workers = std::min<long>(effective_thread_count(threads), trials);

    long events = 0;
    if (workers <= 1) {
        events = count_outages(cfg, snr, snr_db, 0, trials);
    } else {
        std::vector<long> partial(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const long chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long begin = static_cast<long>(w) * chunk;
            const long end = std::min(trials, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                partial[static_cast<std::size_t>(w)] =
                    count_outages(cfg, snr, snr_db, begin, end);
            });
        }
        for (auto& t : pool) t.join();
        for (long e : partial) events += e;
    }

    OutagePoint pt;
    pt.snr_db = snr_db;
    pt.events = events;
    pt.trials = trials;
    pt.p_hat = static_cast<double>(events) / static_cast<double>(trials);
    wilson_interval(events, trials, pt.ci_low, pt.ci_high);
    return pt;
}

std::vector<OutagePoint> run_sweep(const SweepConfig& cfg, int threads, std::ostream* progress) {
    cfg.validate();
    std::vector<OutagePoint> points;
    points.reserve(cfg.snr_grid_db.size());
    for (double snr_db : cfg.snr_grid_db) {
        points.push_back(estimate_outage(cfg, snr_db, threads));
        if (progress != nullptr) {
            const auto& pt = points.back();
            (*progress) << scheme_name(cfg.scheme) << " snr_db=" << pt.snr_db
                        << " events=" << pt.events << "/" << pt.trials << " p_hat=" << pt.p_hat
                        << "\n";
        }
    }
    return points;
}

SlopeEstimate estimate_diversity(std::span<const OutagePoint> points, long event_floor) {
    // Weights follow the delta-method variance of log p_hat: (1-p)/(n p).
    std::vector<double> xs, ys, ws;
    for (const auto& pt : points) {
        if (pt.events < event_floor) continue;
        const double n = static_cast<double>(pt.trials);
        const double p = std::clamp(pt.p_hat, 1.0 / (n + 1.0), n / (n + 1.0));
        xs.push_back(pt.snr_db / 10.0);  // log10(rho)
        ys.push_back(-std::log10(pt.p_hat));
        ws.push_back(n * p / (1.0 - p));
    }
    if (xs.size() < 2) {
        throw InsufficientData("diversity fit needs >= 2 points with enough outage events; "
                               "raise trials or lower the diversity of the configuration");
    }

    double wsum = 0.0, xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        wsum += ws[i];
        xbar += ws[i] * xs[i];
        ybar += ws[i] * ys[i];
    }
    xbar /= wsum;
    ybar /= wsum;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
        sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx <= 0.0) throw InsufficientData("diversity fit needs spread in the SNR grid");

    // Weights are inverse variances up to the common ln(10)^2 factor, which
    // cancels in the slope but not in its standard error.
    const double ln10 = std::log(10.0);
    SlopeEstimate est;
    est.d_hat = sxy / sxx;
    est.stderr_ = std::sqrt(1.0 / sxx) / ln10;
    est.points_used = static_cast<int>(xs.size());
    return est;
}

double closed_form_dmt(Scheme scheme, const MultiplexingGains& g, const ChannelExponents& e) {
    switch (scheme) {
        case Scheme::CF: return cf_dmt(g, e).value.d;
        case Scheme::DF: return df_dmt(g, e).value.d;
        case Scheme::FD_AF: return af_fd_dmt(g, e).value.d;
        case Scheme::HD_AF: return af_hd_dmt(g, e).value.d;
    }
    return 0.0;
}

}  // namespace icr
