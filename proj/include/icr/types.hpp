// Core domain types for the interference-relay-channel DMT toolkit:
// SNR scaling exponents, multiplexing gains, fading realizations and
// their SNR-exponent images.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace icr {

// ---------------------------------------------------------------------------
// Errors surfaced by the library API.
// ---------------------------------------------------------------------------

// AF formulas and programs are only defined for unit source-relay scaling.
struct GammaUnsupported : std::invalid_argument {
    explicit GammaUnsupported(double gamma)
        : std::invalid_argument("amplify-and-forward requires gamma = 1, got gamma = " +
                                std::to_string(gamma)) {}
};

struct DimensionTooLarge : std::invalid_argument {
    explicit DimensionTooLarge(int dims)
        : std::invalid_argument("grid solver supports at most 5 variables, got " +
                                std::to_string(dims)) {}
};

struct StepInvalid : std::invalid_argument {
    explicit StepInvalid(double step)
        : std::invalid_argument("grid step must lie in (0, 0.1], got " + std::to_string(step)) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Scalar helpers.
// ---------------------------------------------------------------------------

// (x)^+ = max{x, 0}
inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }

// Exponents beyond this value can never un-bind an outage constraint; used as
// the image of a dead link (|h|^2 underflow or exact zero).
inline constexpr double kThetaCap = 50.0;

// ---------------------------------------------------------------------------
// Value types.
// ---------------------------------------------------------------------------

// Per-link SNR scaling: cross links ~ rho^alpha, relay->destination ~ rho^beta,
// source->relay ~ rho^gamma.  The direct links scale as rho itself.
struct ChannelExponents {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    ChannelExponents(double alpha_, double beta_, double gamma_)
        : alpha(alpha_), beta(beta_), gamma(gamma_) {
        if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma)) ||
            alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
            throw std::invalid_argument("channel exponents must be finite and non-negative");
        }
    }
};

// Target rate scaling pair: R_k = r_k * log2(rho).
struct MultiplexingGains {
    double r1 = 0.0;
    double r2 = 0.0;

    MultiplexingGains(double r1_, double r2_) : r1(r1_), r2(r2_) {
        if (!(std::isfinite(r1) && std::isfinite(r2)) || r1 < 0.0 || r1 > 1.0 || r2 < 0.0 ||
            r2 > 1.0) {
            throw std::invalid_argument("multiplexing gains must lie in [0, 1]");
        }
    }

    double sum() const { return r1 + r2; }
};

// Average direct-link SNR, linear scale.  rho > 1 keeps log(rho) > 0 so the
// fading -> exponent map is well defined.
struct SnrPoint {
    double rho = 0.0;

    explicit SnrPoint(double rho_) : rho(rho_) {
        if (!std::isfinite(rho) || rho <= 1.0) {
            throw std::invalid_argument("SNR must be finite and > 1 (linear scale)");
        }
    }

    double ln_rho() const { return std::log(rho); }
    double log2_rho() const { return std::log2(rho); }
};

// One slow-fading realization: the eight normalized CN(0,1) coefficients
// H_kl, k = transmitter (1, 2, relay=3), l = receiver (1, 2, relay=3).
struct FadingDraw {
    std::complex<double> h11, h12, h13;
    std::complex<double> h21, h22, h23;
    std::complex<double> h31, h32;
};

// SNR-exponent image of a fading draw: |h_kl|^2 = rho^{-theta_kl}, clamped to
// theta_kl >= 0 (gains above the mean scaling do not help at exponent level).
struct ExponentDraw {
    double theta11 = 0.0, theta12 = 0.0, theta13 = 0.0;
    double theta21 = 0.0, theta22 = 0.0, theta23 = 0.0;
    double theta31 = 0.0, theta32 = 0.0;
};

struct DiversityValue {
    double d = 0.0;
};

// Target rates in bits per channel use.
struct TargetRates {
    double rate1 = 0.0;
    double rate2 = 0.0;

    TargetRates(double rate1_, double rate2_) : rate1(rate1_), rate2(rate2_) {
        if (!(std::isfinite(rate1) && std::isfinite(rate2)) || rate1 < 0.0 || rate2 < 0.0) {
            throw std::invalid_argument("target rates must be finite and non-negative");
        }
    }

    static TargetRates for_gains(const MultiplexingGains& g, const SnrPoint& snr) {
        return TargetRates(g.r1 * snr.log2_rho(), g.r2 * snr.log2_rho());
    }

    double sum() const { return rate1 + rate2; }
};

// ---------------------------------------------------------------------------
// Fading -> exponent transform.
// ---------------------------------------------------------------------------

inline double exponent_of_gain(double gain_sq, const SnrPoint& snr) {
    if (gain_sq <= 0.0) return kThetaCap;
    double theta = -std::log(gain_sq) / snr.ln_rho();
    if (theta <= 0.0) return 0.0;
    return theta < kThetaCap ? theta : kThetaCap;
}

inline ExponentDraw fading_to_exponents(const FadingDraw& d, const SnrPoint& snr) {
    ExponentDraw x;
    x.theta11 = exponent_of_gain(std::norm(d.h11), snr);
    x.theta12 = exponent_of_gain(std::norm(d.h12), snr);
    x.theta13 = exponent_of_gain(std::norm(d.h13), snr);
    x.theta21 = exponent_of_gain(std::norm(d.h21), snr);
    x.theta22 = exponent_of_gain(std::norm(d.h22), snr);
    x.theta23 = exponent_of_gain(std::norm(d.h23), snr);
    x.theta31 = exponent_of_gain(std::norm(d.h31), snr);
    x.theta32 = exponent_of_gain(std::norm(d.h32), snr);
    return x;
}

}  // namespace icr
