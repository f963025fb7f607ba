// Named exponent configurations behind the figure-reproduction sweeps, and
// the per-gain DMT table each sweep emits.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "icr/types.hpp"

namespace icr {

struct FigurePreset {
    std::string name;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    std::string note;
};

// Twelve presets: the interference ladder (fig2*, beta = gamma = 1, with the
// very-strong-interference panel instantiated at alpha = 2 and alpha = 3),
// the relay-link ladder under very strong interference (fig3*), and the
// relay-link ladder under weak interference (fig4*).
std::span<const FigurePreset> figure_presets();
const FigurePreset* find_preset(const std::string& name);

struct SweepRow {
    double r = 0.0;
    double d_cutset = 0.0;
    double d_cf = 0.0;
    double d_df = 0.0;
    double d_af_fd = 0.0;
    double d_af_hd = 0.0;
};

// Symmetric-gain sweep r1 = r2 = r over {0, r_step, ..., 1}.  AF columns
// require gamma = 1.
std::vector<SweepRow> dmt_sweep(const ChannelExponents& e, double r_step = 0.01);

}  // namespace icr
