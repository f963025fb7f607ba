// Per-realization outage decisions for each relaying scheme.
//
// CF and DF verdicts evaluate the exact finite-SNR mutual-information
// expressions of their achievable rate regions.  The AF schemes are judged in
// exponent space, where their error analysis lives (pairwise error exponents
// of double-symbol / block decoding); exponent-event variants of the CF and
// DF tests are also provided for high-SNR consistency checks.
#pragma once

#include <string>

#include "icr/types.hpp"

namespace icr {

// Variance of the quantization noise the CF relay adds, stored in the log
// domain since it spans hundreds of orders of magnitude across fading draws.
struct CompressionNoise {
    double log_value = 0.0;  // natural log of N_Q

    double linear() const { return std::exp(log_value); }

    // ln(1 + N_Q), computed stably for both tails.
    double log1p_linear() const {
        if (log_value > 0.0) return log_value + std::log1p(std::exp(-log_value));
        return std::log1p(std::exp(log_value));
    }
};

struct OutageVerdict {
    bool in_outage = false;
    std::string binding;  // first violated constraint; empty iff not in outage
};

// Smallest compression-noise order that lets both destinations decode the
// relay's description:
//   N_Q = max{rho^(gamma+alpha-beta+theta31), rho^(gamma+1-beta+theta31),
//             rho^(gamma+alpha-beta+theta32), rho^(gamma+1-beta+theta32)}.
// Order equality is implemented as exact equality; constants are invisible at
// DMT scale.
CompressionNoise nq_compress(const ExponentDraw& x, const SnrPoint& snr,
                             const ChannelExponents& e);

// CF with joint decoding: individual-rate tests at each receiver plus the
// sum-rate tests including the full cross term.
OutageVerdict cf_outage(const FadingDraw& d, const SnrPoint& snr, const ChannelExponents& e,
                        const TargetRates& t);

// CF verdict with the compression noise supplied by the caller.
OutageVerdict cf_outage_with_nq(const FadingDraw& d, const SnrPoint& snr,
                                const ChannelExponents& e, const TargetRates& t,
                                const CompressionNoise& nq);

// DF: decode at the relay first; on relay outage the receivers face a plain
// interference channel, otherwise the cooperative region applies.
OutageVerdict df_outage(const FadingDraw& d, const SnrPoint& snr, const ChannelExponents& e,
                        const TargetRates& t);

// Full-duplex AF, exponent events over two consecutive block draws.
// Requires gamma = 1.
OutageVerdict fd_af_outage(const ExponentDraw& block_b, const ExponentDraw& block_b1,
                           const ChannelExponents& e, const MultiplexingGains& g);

// Half-duplex AF double-symbol events; system outage fires when either
// pair's single or joint error event fires.  Requires gamma = 1.
OutageVerdict hd_af_outage(const ExponentDraw& x, const ChannelExponents& e,
                           const MultiplexingGains& g);

// Exponent-event versions of the CF and DF tests (each log-sum replaced by
// its dominant exponent).  Used to measure finite-SNR agreement.
OutageVerdict cf_outage_exponent(const ExponentDraw& x, const ChannelExponents& e,
                                 const MultiplexingGains& g);
OutageVerdict df_outage_exponent(const ExponentDraw& x, const ChannelExponents& e,
                                 const MultiplexingGains& g);

}  // namespace icr
