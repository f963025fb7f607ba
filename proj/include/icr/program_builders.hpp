// Construction of the exponent-minimization programs for each relaying
// scheme's outage events.  The programs are stated directly from the rate
// constraints (one atom per inequality after high-SNR reduction); the grid
// solver, not the builder, discovers where the minima sit.
#pragma once

#include "icr/exponent_program.hpp"
#include "icr/types.hpp"

namespace icr {

// Cut-set components k = 1..4: source-side cuts for pair 1 (k = 1, 2) and
// pair 2 (k = 3, 4), without and with the relay on the source side.
ExponentProgram build_cutset_program(int k, const MultiplexingGains& g,
                                     const ChannelExponents& e);

// CF components k = 1..3: individual-rate events at Rx1 and Rx2 and the
// sum-rate event.  The relay exponents theta31, theta32 enter through the
// compression-noise term and are free optimization variables.
ExponentProgram build_cf_program(int k, const MultiplexingGains& g, const ChannelExponents& e);

struct DfPrograms {
    ExponentProgram relay;  // joint decoding at the relay fails
    ExponentProgram ic;     // relay silent, plain interference channel
    ExponentProgram coop;   // relay forwarding, cooperative region
};
DfPrograms build_df_programs(const MultiplexingGains& g, const ChannelExponents& e);

// Full-duplex AF: per pair, the interference pre-decoding event (over the
// cross-link exponent of the decoding block) and the forwarding event (over
// the per-block direct and relay-path exponents of blocks b and b+1).
struct FdAfPrograms {
    ExponentProgram pair1_predecode;
    ExponentProgram pair1_forward;
    ExponentProgram pair2_predecode;
    ExponentProgram pair2_forward;
};
FdAfPrograms build_fd_af_programs(const MultiplexingGains& g, const ChannelExponents& e);

// Half-duplex AF: per-pair single-message error events and the joint
// double-symbol error event.
struct HdAfPrograms {
    ExponentProgram single1;
    ExponentProgram single2;
    ExponentProgram joint;
};
HdAfPrograms build_hd_af_programs(const MultiplexingGains& g, const ChannelExponents& e);

}  // namespace icr
