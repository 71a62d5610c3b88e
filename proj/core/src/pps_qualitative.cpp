#include "bpmc/pps_qualitative.hpp"

#include "bpmc/errors.hpp"
#include "bpmc/linear.hpp"

#include <algorithm>

namespace bpmc {

std::vector<char> decide_zero(const Pps& pps) {
    const std::size_t n = pps.size();
    std::vector<char> fires(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (fires[i]) continue;
            for (const Term& term : pps.equation(i).terms) {
                bool all_true = true;
                for (std::uint32_t v : term.variables) {
                    if (!fires[v]) {
                        all_true = false;
                        break;
                    }
                }
                if (all_true) {
                    fires[i] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<char> zero(n);
    for (std::size_t i = 0; i < n; ++i) zero[i] = fires[i] ? 0 : 1;
    return zero;
}

namespace {

// Iterative Tarjan over the dependency digraph restricted to active variables.
struct TarjanState {
    const Pps& pps;
    const std::vector<char>& active;
    std::vector<int> index, lowlink;
    std::vector<char> on_stack;
    std::vector<std::size_t> stack;
    int next_index = 0;
    SccDecomposition result;

    explicit TarjanState(const Pps& pps, const std::vector<char>& active)
        : pps(pps),
          active(active),
          index(pps.size(), -1),
          lowlink(pps.size(), -1),
          on_stack(pps.size(), 0) {
        result.component_of.assign(pps.size(), static_cast<std::size_t>(-1));
    }

    void run(std::size_t root) {
        struct Frame {
            std::size_t vertex;
            std::size_t edge = 0;
        };
        std::vector<Frame> frames{{root}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            std::size_t u = frame.vertex;
            const auto& deps = pps.dependencies(u);
            bool descended = false;
            while (frame.edge < deps.size()) {
                std::size_t v = deps[frame.edge++];
                if (!active[v]) continue;
                if (index[v] < 0) {
                    index[v] = lowlink[v] = next_index++;
                    stack.push_back(v);
                    on_stack[v] = 1;
                    frames.push_back(Frame{v});
                    descended = true;
                    break;
                }
                if (on_stack[v]) lowlink[u] = std::min(lowlink[u], index[v]);
            }
            if (descended) continue;
            if (lowlink[u] == index[u]) {
                std::vector<std::size_t> component;
                while (true) {
                    std::size_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    result.component_of[w] = result.components.size();
                    component.push_back(w);
                    if (w == u) break;
                }
                std::sort(component.begin(), component.end());
                result.components.push_back(std::move(component));
            }
            frames.pop_back();
            if (!frames.empty()) {
                std::size_t parent = frames.back().vertex;
                lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
            }
        }
    }
};

}  // namespace

SccDecomposition scc_decomposition(const Pps& pps, const std::vector<char>& active_mask) {
    TarjanState tarjan(pps, active_mask);
    for (std::size_t i = 0; i < pps.size(); ++i) {
        if (active_mask[i] && tarjan.index[i] < 0) tarjan.run(i);
    }
    // Tarjan emits components in reverse topological order of the condensation
    // (a component is finished only after everything it reaches).
    return std::move(tarjan.result);
}

std::vector<char> decide_one(const Pps& pps) {
    const std::size_t n = pps.size();

    // AF shape: constant-1 equations or coefficient sum exactly 1.
    for (std::size_t i = 0; i < n; ++i) {
        const Equation& eq = pps.equation(i);
        bool constant_one = eq.terms.size() == 1 && eq.terms[0].variables.empty() &&
                            eq.terms[0].coefficient == 1;
        if (constant_one) continue;
        Rational sum(0);
        for (const Term& term : eq.terms) sum += term.coefficient;
        if (sum != 1) throw NotAfShapeError(i);
    }

    std::vector<char> zero = decide_zero(pps);
    std::vector<char> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = zero[i] ? 0 : 1;

    // Pruned system g: drop monomials containing zero variables.
    // g_i(1) is then the surviving coefficient mass of equation i.
    std::vector<Rational> mass_at_one(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (const Term& term : pps.equation(i).terms) {
            bool survives = std::none_of(term.variables.begin(), term.variables.end(),
                                         [&](std::uint32_t v) { return zero[v]; });
            if (survives) mass_at_one[i] += term.coefficient;
        }
    }

    SccDecomposition sccs = scc_decomposition(pps, active);

    std::vector<char> below_one(n, 0);
    for (const std::vector<std::size_t>& component : sccs.components) {
        bool marked = false;
        bool has_cycle = false;
        for (std::size_t i : component) {
            if (mass_at_one[i] < 1) marked = true;  // leak through removed monomials
            for (const Term& term : pps.equation(i).terms) {
                bool survives = true;
                for (std::uint32_t v : term.variables) {
                    if (zero[v]) {
                        survives = false;
                        break;
                    }
                }
                if (!survives) continue;
                for (std::uint32_t v : term.variables) {
                    if (below_one[v]) marked = true;  // depends on a <1 variable
                    if (sccs.component_of[v] == sccs.component_of[i]) has_cycle = true;
                }
            }
        }
        if (!marked && has_cycle) {
            // SCC-restricted Jacobian of g at the all-ones point.
            const std::size_t m = component.size();
            RationalMatrix jacobian(m, std::vector<Rational>(m, Rational(0)));
            for (std::size_t a = 0; a < m; ++a) {
                for (const Term& term : pps.equation(component[a]).terms) {
                    bool survives = std::none_of(term.variables.begin(), term.variables.end(),
                                                 [&](std::uint32_t v) { return zero[v]; });
                    if (!survives) continue;
                    for (std::uint32_t v : term.variables) {
                        auto pos = std::lower_bound(component.begin(), component.end(),
                                                    static_cast<std::size_t>(v));
                        if (pos != component.end() && *pos == v) {
                            jacobian[a][pos - component.begin()] += term.coefficient;
                        }
                    }
                }
            }
            if (!spectral_radius_le_one(jacobian)) marked = true;
        }
        if (marked) {
            for (std::size_t i : component) below_one[i] = 1;
        }
    }

    std::vector<char> one(n);
    for (std::size_t i = 0; i < n; ++i) one[i] = (active[i] && !below_one[i]) ? 1 : 0;
    return one;
}

}  // namespace bpmc
