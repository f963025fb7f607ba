#include "icr/exponent_program.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace icr {

bool ExponentProgram::feasible(std::span<const double> theta) const {
    for (const auto& clause : clauses) {
        bool ok = true;
        for (const auto& atom : clause.atoms) {
            double sum = 0.0;
            for (int v : atom.vars) sum += theta[static_cast<std::size_t>(v)];
            if (sum < atom.threshold - 1e-12) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

// Clause compiled to lattice units.  Non-objective variables are pinned at the
// cap (they can only enlarge the outage region and cost nothing), which folds
// into the thresholds.
struct UnitAtom {
    std::vector<int> vars;  // indices into the active-variable list
    std::int64_t need = 0;
};

struct Search {
    std::int64_t cap = 0;
    std::vector<UnitAtom> atoms;
    std::vector<int> active;               // active var ids, declaration order
    std::vector<std::int64_t> suffix_lb;   // sum of per-var binding values from level
    std::vector<std::int64_t> lb;          // per-level binding value (others at cap)
    std::vector<std::int64_t> assign;      // per-level current value
    std::int64_t best = 0;
    std::vector<std::int64_t>* best_assign = nullptr;  // per active var of this clause
    bool improved = false;

    // Minimal value of the level'th variable under which every atom can still
    // be met with the deeper variables at the cap; negative return means the
    // branch is dead regardless of this variable.
    bool level_start(int level, std::int64_t& start) const {
        start = 0;
        const int v = level;
        for (const auto& atom : atoms) {
            std::int64_t slack = atom.need;
            bool contains = false;
            for (int av : atom.vars) {
                if (av < level) {
                    slack -= assign[static_cast<std::size_t>(av)];
                } else if (av == v) {
                    contains = true;
                } else {
                    slack -= cap;
                }
            }
            if (contains) {
                start = std::max(start, slack);
            } else if (slack > 0) {
                return false;
            }
        }
        return start <= cap;
    }

    void run(int level, std::int64_t partial) {
        std::int64_t start = 0;
        if (!level_start(level, start)) return;
        const int last = static_cast<int>(active.size()) - 1;
        if (level == last) {
            const std::int64_t cost = partial + start;
            if (cost < best) {
                best = cost;
                assign[static_cast<std::size_t>(level)] = start;
                *best_assign = assign;
                improved = true;
            }
            return;
        }
        const std::int64_t rem = suffix_lb[static_cast<std::size_t>(level) + 1];
        for (std::int64_t k = start; k <= cap && partial + k + rem < best; ++k) {
            assign[static_cast<std::size_t>(level)] = k;
            run(level + 1, partial + k);
        }
    }
};

}  // namespace

OracleResult solve_grid(const ExponentProgram& program, double step) {
    if (!(std::isfinite(step) && step > 0.0 && step <= 0.1)) throw StepInvalid(step);
    const int n = program.dimension();
    if (n > 5) throw DimensionTooLarge(n);
    if (n == 0) throw std::invalid_argument("program has no variables");

    const auto cap = static_cast<std::int64_t>(std::floor(program.theta_max / step + 1e-9));
    if (cap < 1) throw std::invalid_argument("theta_max below grid step");

    std::vector<char> is_objective(static_cast<std::size_t>(n), 0);
    for (int v : program.objective) is_objective[static_cast<std::size_t>(v)] = 1;

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> best_units(static_cast<std::size_t>(n), 0);
    bool found = false;

    for (const auto& clause : program.clauses) {
        // Compile atoms: ceil thresholds to the lattice, fold pinned variables.
        bool reachable = true;
        std::vector<std::pair<std::vector<int>, std::int64_t>> atoms;  // program var ids
        for (const auto& atom : clause.atoms) {
            auto need = static_cast<std::int64_t>(std::ceil(atom.threshold / step - 1e-9));
            if (need <= 0) continue;
            std::vector<int> vars;
            for (int v : atom.vars) {
                if (is_objective[static_cast<std::size_t>(v)]) {
                    vars.push_back(v);
                } else {
                    need -= cap;
                }
            }
            if (need <= 0) continue;
            if (need > cap * static_cast<std::int64_t>(vars.size())) {
                reachable = false;
                break;
            }
            atoms.emplace_back(std::move(vars), need);
        }
        if (!reachable) continue;

        std::vector<int> active;
        for (const auto& [vars, need] : atoms) {
            for (int v : vars) {
                if (std::find(active.begin(), active.end(), v) == active.end()) {
                    active.push_back(v);
                }
            }
        }
        std::sort(active.begin(), active.end());

        if (active.empty()) {
            // Every inequality is vacuous: the origin is in outage.
            if (0 < best) {
                best = 0;
                std::fill(best_units.begin(), best_units.end(), 0);
                found = true;
            }
            continue;
        }

        // Search levels run through the active variables in reverse declaration
        // order, so the first minimum found carries its mass on the earliest
        // declared variables.
        std::vector<int> order(active.rbegin(), active.rend());
        Search search;
        search.cap = cap;
        search.atoms.reserve(atoms.size());
        for (const auto& [vars, need] : atoms) {
            UnitAtom ua;
            ua.need = need;
            for (int v : vars) {
                const auto it = std::find(order.begin(), order.end(), v);
                ua.vars.push_back(static_cast<int>(it - order.begin()));
            }
            search.atoms.push_back(std::move(ua));
        }
        search.active = order;
        const auto m = order.size();
        search.assign.assign(m, 0);
        search.lb.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t b = 0;
            for (const auto& atom : search.atoms) {
                const auto it = std::find(atom.vars.begin(), atom.vars.end(), static_cast<int>(i));
                if (it == atom.vars.end()) continue;
                const auto others = static_cast<std::int64_t>(atom.vars.size()) - 1;
                b = std::max(b, atom.need - cap * others);
            }
            search.lb[i] = std::max<std::int64_t>(b, 0);
        }
        search.suffix_lb.assign(m + 1, 0);
        for (std::size_t i = m; i-- > 0;) {
            search.suffix_lb[i] = search.suffix_lb[i + 1] + search.lb[i];
        }
        search.best = best;
        std::vector<std::int64_t> clause_assign(m, 0);
        search.best_assign = &clause_assign;
        search.run(0, 0);

        if (search.improved) {
            best = search.best;
            std::fill(best_units.begin(), best_units.end(), 0);
            for (std::size_t i = 0; i < m; ++i) {
                best_units[static_cast<std::size_t>(order[i])] = clause_assign[i];
            }
            found = true;
        }
    }

    OracleResult result;
    result.grid_step = step;
    if (!found) return result;

    result.feasible = true;
    result.min_value = static_cast<double>(best) * step;
    result.argmin.resize(static_cast<std::size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        const auto idx = static_cast<std::size_t>(v);
        if (!is_objective[idx]) {
            result.argmin[idx] = static_cast<double>(cap) * step;
        } else {
            result.argmin[idx] = static_cast<double>(best_units[idx]) * step;
        }
    }
    return result;
}

}  // namespace icr
