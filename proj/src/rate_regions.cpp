#include "icr/rate_regions.hpp"

#include <algorithm>
#include <cmath>

namespace icr {

namespace {

void require_unit_gamma(const ChannelExponents& e) {
    if (e.gamma != 1.0) throw GammaUnsupported(e.gamma);
}

double log2_capacity(double linear_term) { return std::log2(linear_term); }

}  // namespace

CompressionNoise nq_compress(const ExponentDraw& x, const SnrPoint& snr,
                             const ChannelExponents& e) {
    const double order = std::max(
        {e.gamma + e.alpha - e.beta + x.theta31, e.gamma + 1.0 - e.beta + x.theta31,
         e.gamma + e.alpha - e.beta + x.theta32, e.gamma + 1.0 - e.beta + x.theta32});
    return CompressionNoise{order * snr.ln_rho()};
}

OutageVerdict cf_outage(const FadingDraw& d, const SnrPoint& snr, const ChannelExponents& e,
                        const TargetRates& t) {
    return cf_outage_with_nq(d, snr, e, t, nq_compress(fading_to_exponents(d, snr), snr, e));
}

OutageVerdict cf_outage_with_nq(const FadingDraw& d, const SnrPoint& snr,
                                const ChannelExponents& e, const TargetRates& t,
                                const CompressionNoise& nq) {
    const double rho = snr.rho;
    const double ln_rho = snr.ln_rho();
    const double log1p_nq = nq.log1p_linear();
    const double a11 = std::norm(d.h11), a22 = std::norm(d.h22);
    const double a12 = std::norm(d.h12), a21 = std::norm(d.h21);
    const double a13 = std::norm(d.h13), a23 = std::norm(d.h23);

    // x / (1 + N_Q) through the log domain; x = 0 passes through as 0.
    auto deflate = [&](double x) { return x > 0.0 ? std::exp(std::log(x) - log1p_nq) : 0.0; };

    const double rho_g = std::exp(e.gamma * ln_rho);
    const double rho_a = std::exp(e.alpha * ln_rho);

    if (log2_capacity(1.0 + rho * a11 + deflate(rho_g * a13)) < t.rate1) {
        return {true, "rate1"};
    }
    if (log2_capacity(1.0 + rho * a22 + deflate(rho_g * a23)) < t.rate2) {
        return {true, "rate2"};
    }

    const double scale_cross = std::exp(0.5 * (e.gamma + e.alpha) * ln_rho);
    const double scale_direct = std::exp(0.5 * (e.gamma + 1.0) * ln_rho);

    const double cross1 =
        std::norm(scale_cross * d.h13 * std::conj(d.h21) - scale_direct * d.h23 * std::conj(d.h11));
    if (log2_capacity(1.0 + rho * a11 + rho_a * a21 +
                      deflate(rho_g * (a13 + a23) + cross1)) < t.sum()) {
        return {true, "sum-rate-rx1"};
    }

    const double cross2 =
        std::norm(scale_cross * d.h23 * std::conj(d.h12) - scale_direct * d.h13 * std::conj(d.h22));
    if (log2_capacity(1.0 + rho * a22 + rho_a * a12 +
                      deflate(rho_g * (a23 + a13) + cross2)) < t.sum()) {
        return {true, "sum-rate-rx2"};
    }
    return {};
}

OutageVerdict df_outage(const FadingDraw& d, const SnrPoint& snr, const ChannelExponents& e,
                        const TargetRates& t) {
    const double rho = snr.rho;
    const double ln_rho = snr.ln_rho();
    const double rho_g = std::exp(e.gamma * ln_rho);
    const double rho_a = std::exp(e.alpha * ln_rho);
    const double rho_b = std::exp(e.beta * ln_rho);
    const double a11 = std::norm(d.h11), a22 = std::norm(d.h22);
    const double a12 = std::norm(d.h12), a21 = std::norm(d.h21);
    const double a13 = std::norm(d.h13), a23 = std::norm(d.h23);
    const double a31 = std::norm(d.h31), a32 = std::norm(d.h32);

    const bool relay_decodes = t.rate1 <= log2_capacity(1.0 + rho_g * a13) &&
                               t.rate2 <= log2_capacity(1.0 + rho_g * a23) &&
                               t.sum() <= log2_capacity(1.0 + rho_g * (a13 + a23));

    if (!relay_decodes) {
        if (log2_capacity(1.0 + rho * a11) < t.rate1) return {true, "ic:rate1"};
        if (log2_capacity(1.0 + rho * a22) < t.rate2) return {true, "ic:rate2"};
        if (log2_capacity(1.0 + rho * a11 + rho_a * a21) < t.sum()) {
            return {true, "ic:sum-rate-rx1"};
        }
        if (log2_capacity(1.0 + rho_a * a12 + rho * a22) < t.sum()) {
            return {true, "ic:sum-rate-rx2"};
        }
        return {};
    }

    if (log2_capacity(1.0 + rho * a11 + rho_b * a31) < t.rate1) return {true, "coop:rate1"};
    if (log2_capacity(1.0 + rho * a22 + rho_b * a32) < t.rate2) return {true, "coop:rate2"};
    if (log2_capacity(1.0 + rho * a11 + rho_a * a21 + rho_b * a31) < t.sum()) {
        return {true, "coop:sum-rate-rx1"};
    }
    if (log2_capacity(1.0 + rho * a22 + rho_a * a12 + rho_b * a32) < t.sum()) {
        return {true, "coop:sum-rate-rx2"};
    }
    return {};
}

OutageVerdict fd_af_outage(const ExponentDraw& block_b, const ExponentDraw& block_b1,
                           const ChannelExponents& e, const MultiplexingGains& g) {
    require_unit_gamma(e);
    const double noise_order = std::max({1.0, e.beta, 2.0 * e.beta - 2.0});
    const double cross_floor = std::max(1.0, e.beta);

    // Rate exponent for one pair: interference must be pre-decoded through
    // the cross link, then the message rides the direct links of blocks b and
    // b+1 plus the relay path of block b.
    auto pair_outage = [&](double r, double theta_cross, double theta_dir_b,
                           double theta_dir_b1, double theta_sr, double theta_rd_b,
                           double theta_rd_b1, const char* who,
                           OutageVerdict& verdict) -> bool {
        const double predecode = e.alpha - theta_cross - cross_floor;
        const double forward =
            std::max(2.0 - noise_order - theta_dir_b - theta_dir_b1,
                     2.0 * e.beta - 1.0 - noise_order - theta_sr - theta_rd_b - theta_rd_b1);
        if (r > pos_part(std::min(predecode, forward))) {
            verdict.in_outage = true;
            verdict.binding = std::string(who) +
                              (pos_part(predecode) < r ? "-predecode" : "-forward");
            return true;
        }
        return false;
    };

    OutageVerdict v;
    if (pair_outage(g.r1, block_b.theta12, block_b.theta11, block_b1.theta11, block_b.theta13,
                    block_b.theta31, block_b1.theta31, "pair1", v)) {
        return v;
    }
    pair_outage(g.r2, block_b.theta21, block_b.theta22, block_b1.theta22, block_b.theta23,
                block_b.theta32, block_b1.theta32, "pair2", v);
    return v;
}

OutageVerdict hd_af_outage(const ExponentDraw& x, const ChannelExponents& e,
                           const MultiplexingGains& g) {
    require_unit_gamma(e);
    const double b = e.beta;
    const double s2 = 2.0 * g.sum();

    // Single-message double-symbol error exponent falls below the 2r target.
    auto single_event = [&](double r, double dir, double relay_rx, double src_relay) {
        const double r2 = 2.0 * r;
        if (b <= 1.0) {
            return pos_part(std::max(b - relay_rx - src_relay, 2.0 - 2.0 * dir)) < r2;
        }
        return pos_part(std::max(1.0 - dir, 1.0 - relay_rx - src_relay)) < r2 &&
               pos_part(std::max(1.0 - relay_rx - src_relay, 3.0 - b - 2.0 * dir)) < r2;
    };
    // Joint error event for both messages at one receiver.
    auto joint_event = [&](double dir, double cross, double relay_rx, double src_relay) {
        if (b <= 1.0) {
            return pos_part(std::max({2.0 - 2.0 * dir, 2.0 * e.alpha - 2.0 * cross,
                                      b - relay_rx - src_relay})) < s2;
        }
        return pos_part(std::max({3.0 - b - 2.0 * dir, 2.0 * e.alpha + 1.0 - b - 2.0 * cross,
                                  1.0 - relay_rx - src_relay})) < s2;
    };

    if (single_event(g.r1, x.theta11, x.theta31, x.theta13)) return {true, "pair1-single"};
    if (joint_event(x.theta11, x.theta21, x.theta31, x.theta13)) return {true, "pair1-joint"};
    if (single_event(g.r2, x.theta22, x.theta32, x.theta23)) return {true, "pair2-single"};
    if (joint_event(x.theta22, x.theta12, x.theta32, x.theta23)) return {true, "pair2-joint"};
    return {};
}

OutageVerdict cf_outage_exponent(const ExponentDraw& x, const ChannelExponents& e,
                                 const MultiplexingGains& g) {
    const double nq = std::max({pos_part(e.gamma + e.alpha - e.beta + x.theta31),
                                pos_part(e.gamma + 1.0 - e.beta + x.theta31),
                                pos_part(e.gamma + e.alpha - e.beta + x.theta32),
                                pos_part(e.gamma + 1.0 - e.beta + x.theta32)});
    const double s = g.sum();

    const double e1 = std::max({0.0, 1.0 - x.theta11, e.gamma - x.theta13 - nq});
    if (e1 < g.r1) return {true, "rate1"};
    const double e2 = std::max({0.0, 1.0 - x.theta22, e.gamma - x.theta23 - nq});
    if (e2 < g.r2) return {true, "rate2"};

    const double cross1 = std::max(e.gamma + e.alpha - x.theta13 - x.theta21,
                                   e.gamma + 1.0 - x.theta23 - x.theta11);
    const double e3 =
        std::max({0.0, 1.0 - x.theta11, e.alpha - x.theta21, e.gamma - x.theta13 - nq,
                  e.gamma - x.theta23 - nq, cross1 - nq});
    if (e3 < s) return {true, "sum-rate-rx1"};

    const double cross2 = std::max(e.gamma + e.alpha - x.theta23 - x.theta12,
                                   e.gamma + 1.0 - x.theta13 - x.theta22);
    const double e4 =
        std::max({0.0, 1.0 - x.theta22, e.alpha - x.theta12, e.gamma - x.theta23 - nq,
                  e.gamma - x.theta13 - nq, cross2 - nq});
    if (e4 < s) return {true, "sum-rate-rx2"};
    return {};
}

OutageVerdict df_outage_exponent(const ExponentDraw& x, const ChannelExponents& e,
                                 const MultiplexingGains& g) {
    const double s = g.sum();
    const bool relay_decodes =
        g.r1 <= pos_part(e.gamma - x.theta13) && g.r2 <= pos_part(e.gamma - x.theta23) &&
        s <= pos_part(std::max(e.gamma - x.theta13, e.gamma - x.theta23));

    if (!relay_decodes) {
        if (pos_part(1.0 - x.theta11) < g.r1) return {true, "ic:rate1"};
        if (pos_part(1.0 - x.theta22) < g.r2) return {true, "ic:rate2"};
        if (pos_part(std::max(1.0 - x.theta11, e.alpha - x.theta21)) < s) {
            return {true, "ic:sum-rate-rx1"};
        }
        if (pos_part(std::max(1.0 - x.theta22, e.alpha - x.theta12)) < s) {
            return {true, "ic:sum-rate-rx2"};
        }
        return {};
    }

    if (pos_part(std::max(1.0 - x.theta11, e.beta - x.theta31)) < g.r1) {
        return {true, "coop:rate1"};
    }
    if (pos_part(std::max(1.0 - x.theta22, e.beta - x.theta32)) < g.r2) {
        return {true, "coop:rate2"};
    }
    if (pos_part(std::max({1.0 - x.theta11, e.alpha - x.theta21, e.beta - x.theta31})) < s) {
        return {true, "coop:sum-rate-rx1"};
    }
    if (pos_part(std::max({1.0 - x.theta22, e.alpha - x.theta12, e.beta - x.theta32})) < s) {
        return {true, "coop:sum-rate-rx2"};
    }
    return {};
}

}  // namespace icr
