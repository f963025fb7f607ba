#include "icr/presets.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "icr/dmt_formulas.hpp"

namespace icr {

namespace {

const std::array<FigurePreset, 12> kPresets = {{
    {"fig2a", 0.5, 1.0, 1.0, "weak interference"},
    {"fig2b", 1.0, 1.0, 1.0, "moderate interference"},
    {"fig2c", 2.0, 1.0, 1.0, "very strong interference"},
    {"fig2d", 3.0, 1.0, 1.0, "very strong interference, wider gap"},
    {"fig3a", 2.0, 0.2, 1.0, "weak relay links"},
    {"fig3b", 2.0, 1.0, 1.0, "balanced relay links"},
    {"fig3c", 2.0, 2.0, 1.0, "strong relay links"},
    {"fig3d", 2.0, 3.0, 1.0, "relay links strong enough for CF optimality"},
    {"fig4a", 0.5, 0.5, 1.0, "weak interference, weak relay links"},
    {"fig4b", 0.5, 1.0, 1.0, "weak interference, balanced relay links"},
    {"fig4c", 0.5, 1.5, 1.0, "weak interference, strong relay links"},
    {"fig4d", 0.5, 3.0, 1.0, "weak interference, very strong relay links"},
}};

}  // namespace

std::span<const FigurePreset> figure_presets() { return kPresets; }

const FigurePreset* find_preset(const std::string& name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::vector<SweepRow> dmt_sweep(const ChannelExponents& e, double r_step) {
    if (!(r_step > 0.0 && r_step <= 0.5)) {
        throw std::invalid_argument("r_step must lie in (0, 0.5]");
    }
    const int steps = static_cast<int>(std::lround(1.0 / r_step));
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        const double r = std::min(1.0, static_cast<double>(i) * r_step);
        const MultiplexingGains g(r, r);
        SweepRow row;
        row.r = r;
        row.d_cutset = cutset_dmt(g, e).value.d;
        row.d_cf = cf_dmt(g, e).value.d;
        row.d_df = df_dmt(g, e).value.d;
        row.d_af_fd = af_fd_dmt(g, e).value.d;
        row.d_af_hd = af_hd_dmt(g, e).value.d;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace icr
