#include "icr/oracle_verify.hpp"

#include <stdexcept>

#include "icr/dmt_formulas.hpp"
#include "icr/program_builders.hpp"
#include "icr/rng.hpp"

namespace icr {

std::string oracle_family_name(OracleFamily f) {
    switch (f) {
        case OracleFamily::Cutset: return "cutset";
        case OracleFamily::CF: return "cf";
        case OracleFamily::DF: return "df";
        case OracleFamily::FD_AF: return "fd_af";
        case OracleFamily::HD_AF: return "hd_af";
    }
    return "?";
}

OracleFamily oracle_family_from_name(const std::string& name) {
    if (name == "cutset") return OracleFamily::Cutset;
    if (name == "cf") return OracleFamily::CF;
    if (name == "df") return OracleFamily::DF;
    if (name == "fd_af") return OracleFamily::FD_AF;
    if (name == "hd_af") return OracleFamily::HD_AF;
    throw std::invalid_argument("unknown oracle family: " + name +
                                " (cutset|cf|df|fd_af|hd_af)");
}

namespace {

int active_dims(const ExponentProgram& p) { return p.dimension(); }

AgreementRow row(OracleFamily family, const std::string& component,
                 const ChannelExponents& e, const MultiplexingGains& g, double closed_form,
                 const ExponentProgram& program, double step) {
    AgreementRow r;
    r.family = family;
    r.component = component;
    r.alpha = e.alpha;
    r.beta = e.beta;
    r.gamma = e.gamma;
    r.r1 = g.r1;
    r.r2 = g.r2;
    r.closed_form = closed_form;
    r.oracle = solve_grid(program, step).min_value;
    r.dims = active_dims(program);
    return r;
}

}  // namespace

std::vector<AgreementRow> verify_family(OracleFamily family, int samples, double step,
                                        std::uint64_t seed) {
    std::vector<AgreementRow> rows;
    for (int i = 0; i < samples; ++i) {
        Rng rng = Rng::from_key(seed, {static_cast<std::uint64_t>(family),
                                       static_cast<std::uint64_t>(i)});
        const bool af = family == OracleFamily::FD_AF || family == OracleFamily::HD_AF;
        const ChannelExponents e(3.0 * rng.uniform_open01(), 4.0 * rng.uniform_open01(),
                                 af ? 1.0 : 2.0 * rng.uniform_open01());
        const MultiplexingGains g(rng.uniform_open01(), rng.uniform_open01());

        switch (family) {
            case OracleFamily::Cutset: {
                const auto closed = cutset_dmt(g, e);
                for (int k = 1; k <= 4; ++k) {
                    rows.push_back(row(family, closed.components[k - 1].label, e, g,
                                       closed.components[k - 1].value,
                                       build_cutset_program(k, g, e), step));
                }
                break;
            }
            case OracleFamily::CF: {
                const auto closed = cf_dmt(g, e);
                for (int k = 1; k <= 3; ++k) {
                    rows.push_back(row(family, closed.components[k - 1].label, e, g,
                                       closed.components[k - 1].value,
                                       build_cf_program(k, g, e), step));
                }
                break;
            }
            case OracleFamily::DF: {
                const auto closed = df_components(g, e);
                const auto programs = build_df_programs(g, e);
                rows.push_back(row(family, "relay", e, g, closed.relay, programs.relay, step));
                rows.push_back(row(family, "ic", e, g, closed.ic, programs.ic, step));
                rows.push_back(row(family, "coop", e, g, closed.coop, programs.coop, step));
                break;
            }
            case OracleFamily::FD_AF: {
                const auto closed = af_fd_dmt(g, e);
                const auto programs = build_fd_af_programs(g, e);
                rows.push_back(row(family, "pair1_forward", e, g, closed.components[0].value,
                                   programs.pair1_forward, step));
                rows.push_back(row(family, "pair2_forward", e, g, closed.components[1].value,
                                   programs.pair2_forward, step));
                rows.push_back(row(family, "pair1_predecode", e, g,
                                   closed.components[2].value, programs.pair1_predecode, step));
                rows.push_back(row(family, "pair2_predecode", e, g,
                                   closed.components[3].value, programs.pair2_predecode, step));
                break;
            }
            case OracleFamily::HD_AF: {
                const auto closed = af_hd_dmt(g, e);
                const auto programs = build_hd_af_programs(g, e);
                rows.push_back(row(family, "pair1_single", e, g, closed.components[0].value,
                                   programs.single1, step));
                rows.push_back(row(family, "pair2_single", e, g, closed.components[1].value,
                                   programs.single2, step));
                rows.push_back(row(family, "joint", e, g, closed.components[2].value,
                                   programs.joint, step));
                break;
            }
        }
    }
    return rows;
}

}  // namespace icr
