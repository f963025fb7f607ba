#include "icr/program_builders.hpp"

#include <algorithm>
#include <stdexcept>

namespace icr {

namespace {

double search_cap(const ChannelExponents& e) {
    return std::max({e.alpha, e.beta, e.gamma, 1.0}) + 1.0;
}

OutageAtom atom(std::vector<int> vars, double threshold) {
    return OutageAtom{std::move(vars), threshold};
}

// Appends the clauses for one CF rate inequality.  The inequality couples the
// source-relay exponent with the compression noise
//   (gamma - theta13 - max{(gamma+alpha-beta+theta3x)^+, (gamma+1-beta+theta3x)^+}
//    - <core thresholds already subtracted>)^+ <= target,
// which splits into the relay-observation branch (theta13 alone carries the
// outage) and the four compression branches (theta13 together with theta31 or
// theta32).
void append_cf_clauses(ExponentProgram& p, std::vector<OutageAtom> core, int i13, int i31,
                       int i32, double target, const ChannelExponents& e) {
    const double strong = e.gamma + e.alpha - e.beta;  // interference-limited compression
    const double weak = e.gamma + 1.0 - e.beta;        // direct-signal-limited compression
    auto with = [&core](OutageAtom extra) {
        OutageClause c;
        c.atoms = core;
        c.atoms.push_back(std::move(extra));
        return c;
    };
    p.clauses.push_back(with(atom({i13}, e.gamma - target)));
    p.clauses.push_back(with(atom({i13, i31}, e.gamma - target - strong)));
    p.clauses.push_back(with(atom({i13, i31}, e.gamma - target - weak)));
    p.clauses.push_back(with(atom({i13, i32}, e.gamma - target - strong)));
    p.clauses.push_back(with(atom({i13, i32}, e.gamma - target - weak)));
}

void require_unit_gamma(const ChannelExponents& e) {
    if (e.gamma != 1.0) throw GammaUnsupported(e.gamma);
}

}  // namespace

ExponentProgram build_cutset_program(int k, const MultiplexingGains& g,
                                     const ChannelExponents& e) {
    ExponentProgram p;
    p.theta_max = search_cap(e);
    p.objective = {0, 1};
    OutageClause c;
    switch (k) {
        case 1:
            p.var_names = {"theta11", "theta13"};
            c.atoms = {atom({0}, 1.0 - g.r1), atom({1}, e.gamma - g.r1)};
            break;
        case 2:
            p.var_names = {"theta11", "theta31"};
            c.atoms = {atom({0}, 1.0 - g.r1), atom({1}, e.beta - g.r1)};
            break;
        case 3:
            p.var_names = {"theta22", "theta23"};
            c.atoms = {atom({0}, 1.0 - g.r2), atom({1}, e.gamma - g.r2)};
            break;
        case 4:
            p.var_names = {"theta22", "theta32"};
            c.atoms = {atom({0}, 1.0 - g.r2), atom({1}, e.beta - g.r2)};
            break;
        default:
            throw std::invalid_argument("cut-set component index must be 1..4");
    }
    p.clauses.push_back(std::move(c));
    return p;
}

ExponentProgram build_cf_program(int k, const MultiplexingGains& g, const ChannelExponents& e) {
    ExponentProgram p;
    p.theta_max = search_cap(e);
    switch (k) {
        case 1:
        case 2: {
            const double r = (k == 1) ? g.r1 : g.r2;
            p.var_names = (k == 1)
                              ? std::vector<std::string>{"theta11", "theta13", "theta31",
                                                         "theta32"}
                              : std::vector<std::string>{"theta22", "theta23", "theta31",
                                                         "theta32"};
            p.objective = {0, 1, 2, 3};
            append_cf_clauses(p, {atom({0}, 1.0 - r)}, 1, 2, 3, r, e);
            break;
        }
        case 3: {
            const double s = g.sum();
            p.var_names = {"theta11", "theta21", "theta13", "theta31", "theta32"};
            p.objective = {0, 1, 2, 3, 4};
            append_cf_clauses(p, {atom({0}, 1.0 - s), atom({1}, e.alpha - s)}, 2, 3, 4, s, e);
            break;
        }
        default:
            throw std::invalid_argument("CF component index must be 1..3");
    }
    return p;
}

DfPrograms build_df_programs(const MultiplexingGains& g, const ChannelExponents& e) {
    const double s = g.sum();
    DfPrograms out;

    // Joint decoding at the relay: either individual rate or the sum rate
    // outruns the source-relay links.
    auto& relay = out.relay;
    relay.theta_max = search_cap(e);
    relay.var_names = {"theta13", "theta23"};
    relay.objective = {0, 1};
    relay.clauses.push_back({{atom({0}, e.gamma - g.r1)}});
    relay.clauses.push_back({{atom({1}, e.gamma - g.r2)}});
    relay.clauses.push_back({{atom({0}, e.gamma - s), atom({1}, e.gamma - s)}});

    // Relay silent: plain interference channel with joint decoding.
    auto& ic = out.ic;
    ic.theta_max = search_cap(e);
    ic.var_names = {"theta11", "theta21", "theta22", "theta12"};
    ic.objective = {0, 1, 2, 3};
    ic.clauses.push_back({{atom({0}, 1.0 - g.r1)}});
    ic.clauses.push_back({{atom({2}, 1.0 - g.r2)}});
    ic.clauses.push_back({{atom({0}, 1.0 - s), atom({1}, e.alpha - s)}});
    ic.clauses.push_back({{atom({2}, 1.0 - s), atom({3}, e.alpha - s)}});

    // Relay forwarding: per-receiver individual and joint-decoding events.
    // The Rx2 joint event mirrors the Rx1 one variable-for-variable and
    // attains the same minimum, so only the Rx1 instance is searched; keeping
    // both would need a sixth variable, beyond the solver's limit.
    auto& coop = out.coop;
    coop.theta_max = search_cap(e);
    coop.var_names = {"theta11", "theta21", "theta31", "theta22", "theta32"};
    coop.objective = {0, 1, 2, 3, 4};
    coop.clauses.push_back({{atom({0}, 1.0 - g.r1), atom({2}, e.beta - g.r1)}});
    coop.clauses.push_back({{atom({3}, 1.0 - g.r2), atom({4}, e.beta - g.r2)}});
    coop.clauses.push_back(
        {{atom({0}, 1.0 - s), atom({1}, e.alpha - s), atom({2}, e.beta - s)}});

    return out;
}

FdAfPrograms build_fd_af_programs(const MultiplexingGains& g, const ChannelExponents& e) {
    require_unit_gamma(e);
    const double noise_order = std::max({1.0, e.beta, 2.0 * e.beta - 2.0});
    const double cross_floor = std::max(1.0, e.beta);
    FdAfPrograms out;

    auto predecode = [&](const char* var, double r) {
        ExponentProgram p;
        p.theta_max = search_cap(e);
        p.var_names = {var};
        p.objective = {0};
        p.clauses.push_back({{atom({0}, e.alpha - cross_floor - r)}});
        return p;
    };
    auto forward = [&](std::vector<std::string> vars, double r) {
        ExponentProgram p;
        p.theta_max = search_cap(e);
        p.var_names = std::move(vars);
        p.objective = {0, 1, 2, 3, 4};
        p.clauses.push_back({{atom({0, 1}, 2.0 - noise_order - r),
                              atom({2, 3, 4}, 2.0 * e.beta - 1.0 - noise_order - r)}});
        return p;
    };

    out.pair1_predecode = predecode("theta12_b", g.r1);
    out.pair1_forward = forward(
        {"theta11_b", "theta11_b1", "theta13_b", "theta31_b", "theta31_b1"}, g.r1);
    out.pair2_predecode = predecode("theta21_b", g.r2);
    out.pair2_forward = forward(
        {"theta22_b", "theta22_b1", "theta23_b", "theta32_b", "theta32_b1"}, g.r2);
    return out;
}

HdAfPrograms build_hd_af_programs(const MultiplexingGains& g, const ChannelExponents& e) {
    require_unit_gamma(e);
    const double b = e.beta;
    HdAfPrograms out;

    // Single-message error event; double-symbols carry two channel uses, so
    // targets enter as 2r.
    auto single = [&](std::vector<std::string> vars, double r) {
        ExponentProgram p;
        p.theta_max = search_cap(e);
        p.var_names = std::move(vars);  // direct, relay->rx, source->relay
        p.objective = {0, 1, 2};
        OutageClause c;
        if (b <= 1.0) {
            c.atoms = {atom({0}, 1.0 - r), atom({1, 2}, b - 2.0 * r)};
        } else {
            c.atoms = {atom({0}, 1.0 - 2.0 * r), atom({0}, (3.0 - b) / 2.0 - r),
                       atom({1, 2}, 1.0 - 2.0 * r)};
        }
        p.clauses.push_back(std::move(c));
        return p;
    };
    out.single1 = single({"theta11", "theta31", "theta13"}, g.r1);
    out.single2 = single({"theta22", "theta32", "theta23"}, g.r2);

    const double s = g.sum();
    auto& joint = out.joint;
    joint.theta_max = search_cap(e);
    joint.var_names = {"theta11", "theta21", "theta31", "theta13"};
    joint.objective = {0, 1, 2, 3};
    OutageClause c;
    if (b <= 1.0) {
        c.atoms = {atom({0}, 1.0 - s), atom({1}, e.alpha - s), atom({2, 3}, b - 2.0 * s)};
    } else {
        c.atoms = {atom({0}, (3.0 - b) / 2.0 - s),
                   atom({1}, (2.0 * e.alpha + 1.0 - b) / 2.0 - s),
                   atom({2, 3}, 1.0 - 2.0 * s)};
    }
    joint.clauses.push_back(std::move(c));
    return out;
}

}  // namespace icr
