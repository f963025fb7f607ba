// Closed-form diversity-multiplexing tradeoff expressions for the symmetric
// slow-fading interference channel with a relay: cut-set outer bound,
// compress-and-forward, decode-and-forward and full-/half-duplex
// amplify-and-forward inner bounds, plus the optimality conditions under
// which the inner bounds meet the outer bound.
//
// All functions are pure; diversity values are exact double arithmetic over
// pos-parts of affine expressions in (r1, r2).
#pragma once

#include <string>
#include <vector>

#include "icr/types.hpp"

namespace icr {

struct DmtComponent {
    std::string label;
    double value = 0.0;
};

// A DMT value together with the terms inside the outer min.
struct DmtBreakdown {
    DiversityValue value;
    std::vector<DmtComponent> components;
};

// Result of checking a set of sufficient optimality conditions.
struct OptimalityReport {
    bool holds = false;
    std::vector<std::string> violated;  // identifiers of failed conditions
};

// Cut-set outer bound, min over four transmitter-side cuts.
DmtBreakdown cutset_dmt(const MultiplexingGains& g, const ChannelExponents& e);

// Compress-and-forward inner bound (joint decoding of both messages, relay
// with both Rx- and Tx-CSI).
DmtBreakdown cf_dmt(const MultiplexingGains& g, const ChannelExponents& e);

// Sufficient conditions for CF to meet the cut-set bound.
// Condition ids: "relay-link-strength", "joint-decoding-rate".
OptimalityReport cf_optimality_holds(const MultiplexingGains& g, const ChannelExponents& e);

// Optimal DMT under the CF conditions (two parallel relay channels).
DiversityValue cf_optimal_dmt(const MultiplexingGains& g, const ChannelExponents& e);

// Maximum diversity achievable with CF, i.e. the CF bound at r1 = r2 = 0.
DiversityValue cf_max_diversity(const ChannelExponents& e);

// Upper bound on the DMT of the single (interference-free) relay channel.
DiversityValue relay_dmt_upper(double r, double beta, double gamma);

// Achievable DMT of the interference channel without a relay.
DiversityValue ic_dmt(const MultiplexingGains& g, const ChannelExponents& e);

// The three exponents entering the DF bound: outage at the relay, the relay-
// silent (plain IC) region, and the cooperative region.
struct DfComponents {
    double relay = 0.0;
    double ic = 0.0;
    double coop = 0.0;
};
DfComponents df_components(const MultiplexingGains& g, const ChannelExponents& e);

// Decode-and-forward inner bound.
DmtBreakdown df_dmt(const MultiplexingGains& g, const ChannelExponents& e);

// Sufficient conditions for DF to meet the cut-set bound.
// Condition ids: "relay-sum-rate", "relay-individual-rate",
// "ic-joint-decoding", "coop-joint-decoding".
OptimalityReport df_optimality_holds(const MultiplexingGains& g, const ChannelExponents& e);

// Optimal DMT under the DF conditions.
DiversityValue df_optimal_dmt(const MultiplexingGains& g, const ChannelExponents& e);

// Maximum diversity achievable with DF: min{gamma + 1, beta + 1}.
DiversityValue df_max_diversity(const ChannelExponents& e);

// Full-duplex amplify-and-forward inner bound.  Requires gamma = 1.
DmtBreakdown af_fd_dmt(const MultiplexingGains& g, const ChannelExponents& e);

// Half-duplex amplify-and-forward inner bound (joint decoding of message
// pairs over double-symbols).  Requires gamma = 1.
DmtBreakdown af_hd_dmt(const MultiplexingGains& g, const ChannelExponents& e);

}  // namespace icr
