#include "icr/dmt_formulas.hpp"

#include <algorithm>
#include <cmath>

namespace icr {

namespace {

double min_of(const std::vector<DmtComponent>& comps) {
    double m = comps.front().value;
    for (const auto& c : comps) m = std::min(m, c.value);
    return m;
}

DmtBreakdown make_breakdown(std::vector<DmtComponent> comps) {
    DmtBreakdown b;
    b.value.d = min_of(comps);
    b.components = std::move(comps);
    return b;
}

void require_unit_gamma(const ChannelExponents& e) {
    if (e.gamma != 1.0) throw GammaUnsupported(e.gamma);
}

}  // namespace

DmtBreakdown cutset_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    return make_breakdown({
        {"d1+", pos_part(1.0 - g.r1) + pos_part(e.gamma - g.r1)},
        {"d2+", pos_part(1.0 - g.r1) + pos_part(e.beta - g.r1)},
        {"d3+", pos_part(1.0 - g.r2) + pos_part(e.gamma - g.r2)},
        {"d4+", pos_part(1.0 - g.r2) + pos_part(e.beta - g.r2)},
    });
}

DmtBreakdown cf_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    // Compression penalty on the source->relay path.  With strong interference
    // the relay observation must survive decoding next to the cross signal.
    const double penalty = (e.alpha > 1.0) ? pos_part(e.gamma + e.alpha - e.beta)
                                           : pos_part(e.gamma + 1.0 - e.beta);
    const double s = g.sum();
    return make_breakdown({
        {"rate1", pos_part(1.0 - g.r1) + pos_part(e.gamma - penalty - g.r1)},
        {"rate2", pos_part(1.0 - g.r2) + pos_part(e.gamma - penalty - g.r2)},
        {"sum_rate", pos_part(1.0 - s) + pos_part(e.alpha - s) +
                         pos_part(e.gamma - penalty - s)},
    });
}

OptimalityReport cf_optimality_holds(const MultiplexingGains& g, const ChannelExponents& e) {
    OptimalityReport rep;
    if (!(e.beta >= std::max(e.gamma + 1.0, e.gamma + e.alpha))) {
        rep.violated.push_back("relay-link-strength");
    }
    const double s = g.sum();
    const double lhs = std::min(pos_part(1.0 - g.r1) + pos_part(e.gamma - g.r1),
                                pos_part(1.0 - g.r2) + pos_part(e.gamma - g.r2));
    const double rhs = pos_part(1.0 - s) + pos_part(e.alpha - s) + pos_part(e.gamma - s);
    if (!(lhs <= rhs)) rep.violated.push_back("joint-decoding-rate");
    rep.holds = rep.violated.empty();
    return rep;
}

DiversityValue cf_optimal_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    return {std::min(pos_part(1.0 - g.r1) + pos_part(e.gamma - g.r1),
                     pos_part(1.0 - g.r2) + pos_part(e.gamma - g.r2))};
}

DiversityValue cf_max_diversity(const ChannelExponents& e) {
    const double reach =
        (e.alpha > 1.0) ? pos_part(e.beta - e.alpha) : pos_part(e.beta - 1.0);
    return {1.0 + std::min(e.gamma, reach)};
}

DiversityValue relay_dmt_upper(double r, double beta, double gamma) {
    return {std::min(pos_part(1.0 - r) + pos_part(gamma - r),
                     pos_part(1.0 - r) + pos_part(beta - r))};
}

DiversityValue ic_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    const double s = g.sum();
    return {std::min({pos_part(1.0 - g.r1), pos_part(1.0 - g.r2),
                      pos_part(1.0 - s) + pos_part(e.alpha - s)})};
}

DfComponents df_components(const MultiplexingGains& g, const ChannelExponents& e) {
    const double s = g.sum();
    DfComponents c;
    c.relay = std::min({pos_part(e.gamma - g.r1), pos_part(e.gamma - g.r2),
                        2.0 * pos_part(e.gamma - s)});
    c.ic = ic_dmt(g, e).d;
    c.coop = std::min({pos_part(1.0 - g.r1) + pos_part(e.beta - g.r1),
                       pos_part(1.0 - g.r2) + pos_part(e.beta - g.r2),
                       pos_part(1.0 - s) + pos_part(e.alpha - s) + pos_part(e.beta - s)});
    return c;
}

DmtBreakdown df_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    const DfComponents c = df_components(g, e);
    if (g.sum() < e.gamma) {
        return make_breakdown({
            {"ic_plus_relay", c.ic + c.relay},
            {"coop", c.coop},
        });
    }
    // Relay outage dominates: the channel behaves like a plain IC.
    return make_breakdown({{"ic", c.ic}});
}

OptimalityReport df_optimality_holds(const MultiplexingGains& g, const ChannelExponents& e) {
    OptimalityReport rep;
    const double s = g.sum();
    if (!(s <= e.gamma)) rep.violated.push_back("relay-sum-rate");
    if (!(std::max(pos_part(e.gamma - g.r1), pos_part(e.gamma - g.r2)) <=
          2.0 * pos_part(e.gamma - s))) {
        rep.violated.push_back("relay-individual-rate");
    }
    if (!(std::max(1.0 - g.r1, 1.0 - g.r2) <= pos_part(1.0 - s) + pos_part(e.alpha - s))) {
        rep.violated.push_back("ic-joint-decoding");
    }
    const double lhs4 = std::max((1.0 - g.r1) + pos_part(e.beta - g.r1),
                                 (1.0 - g.r2) + pos_part(e.beta - g.r2));
    const double rhs4 = pos_part(1.0 - s) + pos_part(e.alpha - s) + pos_part(e.beta - s);
    if (!(lhs4 <= rhs4)) rep.violated.push_back("coop-joint-decoding");
    rep.holds = rep.violated.empty();
    return rep;
}

DiversityValue df_optimal_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    return {std::min({pos_part(1.0 - g.r1) + pos_part(e.gamma - g.r1),
                      pos_part(1.0 - g.r2) + pos_part(e.gamma - g.r2),
                      pos_part(1.0 - g.r1) + pos_part(e.beta - g.r1),
                      pos_part(1.0 - g.r2) + pos_part(e.beta - g.r2)})};
}

DiversityValue df_max_diversity(const ChannelExponents& e) {
    return {std::min(e.gamma + 1.0, e.beta + 1.0)};
}

DmtBreakdown af_fd_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    require_unit_gamma(e);
    const double a = e.alpha, b = e.beta;
    if (b < 1.0) {
        return make_breakdown({
            {"pair1_forward", pos_part(1.0 - g.r1)},
            {"pair2_forward", pos_part(1.0 - g.r2)},
            {"pair1_predecode", pos_part(a - 1.0 - g.r1)},
            {"pair2_predecode", pos_part(a - 1.0 - g.r2)},
        });
    }
    if (b < 2.0) {
        return make_breakdown({
            {"pair1_forward", pos_part(2.0 - b - g.r1) + pos_part(b - 1.0 - g.r1)},
            {"pair2_forward", pos_part(2.0 - b - g.r2) + pos_part(b - 1.0 - g.r2)},
            {"pair1_predecode", pos_part(a - b - g.r1)},
            {"pair2_predecode", pos_part(a - b - g.r2)},
        });
    }
    return make_breakdown({
        {"pair1_forward", pos_part(1.0 - g.r1)},
        {"pair2_forward", pos_part(1.0 - g.r2)},
        {"pair1_predecode", pos_part(a - b - g.r1)},
        {"pair2_predecode", pos_part(a - b - g.r2)},
    });
}

DmtBreakdown af_hd_dmt(const MultiplexingGains& g, const ChannelExponents& e) {
    require_unit_gamma(e);
    const double a = e.alpha, b = e.beta;
    const double s = g.sum();
    if (b <= 1.0) {
        return make_breakdown({
            {"pair1_single", pos_part(1.0 - g.r1) + pos_part(b - 2.0 * g.r1)},
            {"pair2_single", pos_part(1.0 - g.r2) + pos_part(b - 2.0 * g.r2)},
            {"joint", pos_part(1.0 - s) + pos_part(a - s) + pos_part(b - 2.0 * s)},
        });
    }
    auto single = [&](double r) {
        return std::max(2.0 * pos_part(1.0 - 2.0 * r),
                        pos_part(1.0 - 2.0 * r) + pos_part((3.0 - b) / 2.0 - r));
    };
    return make_breakdown({
        {"pair1_single", single(g.r1)},
        {"pair2_single", single(g.r2)},
        {"joint", pos_part((3.0 - b) / 2.0 - s) + pos_part((2.0 * a + 1.0 - b) / 2.0 - s) +
                      pos_part(1.0 - 2.0 * s)},
    });
}

}  // namespace icr
