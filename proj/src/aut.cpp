#include "eulersym/aut.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace eulersym {

SizeGuards SizeGuards::from_env() {
    SizeGuards guards;
    if (const char* cap = std::getenv("EULERSYM_CAP")) {
        int value = std::atoi(cap);
        if (value > 0) {
            guards.aut_cap = value;
            guards.euler_edge_cap = value;
        }
    }
    return guards;
}

namespace {

// Weighted adjacency view: multiplicity matrix plus per-vertex
// refinement invariants.
struct WeightedView {
    int n = 0;
    std::vector<std::vector<int>> mult;          // n x n
    std::vector<std::vector<int>> profile;       // sorted nonzero multiplicities at v
    std::vector<int> degree;

    explicit WeightedView(const Multigraph& g) : n(g.vertex_count()) {
        mult.assign(n, std::vector<int>(n, 0));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            ++mult[g.ends(e)[0]][g.ends(e)[1]], ++mult[g.ends(e)[1]][g.ends(e)[0]];
        profile.resize(n);
        degree.resize(n);
        for (int v = 0; v < n; ++v) {
            for (int w = 0; w < n; ++w)
                if (mult[v][w] > 0) profile[v].push_back(mult[v][w]);
            std::sort(profile[v].begin(), profile[v].end());
            degree[v] = std::accumulate(profile[v].begin(), profile[v].end(), 0);
        }
    }
};

// All vertex bijections g1 -> g2 preserving multiplicities.
struct VertexMatcher {
    const WeightedView& a;
    const WeightedView& b;
    std::vector<int> image;
    std::vector<bool> used;
    bool stop_at_first = false;
    std::vector<std::vector<int>> found;

    bool feasible(int v, int target) const {
        if (a.degree[v] != b.degree[target] || a.profile[v] != b.profile[target]) return false;
        for (int w = 0; w < v; ++w)
            if (a.mult[v][w] != b.mult[target][image[w]]) return false;
        return true;
    }

    void search(int v) {
        if (stop_at_first && !found.empty()) return;
        if (v == a.n) {
            found.push_back(image);
            return;
        }
        for (int target = 0; target < b.n; ++target) {
            if (used[target] || !feasible(v, target)) continue;
            used[target] = true;
            image[v] = target;
            search(v + 1);
            used[target] = false;
        }
    }
};

std::vector<std::vector<int>> vertex_bijections(const Multigraph& g1, const Multigraph& g2,
                                                bool stop_at_first) {
    WeightedView a(g1), b(g2);
    if (a.n != b.n) return {};
    VertexMatcher matcher{a, b, std::vector<int>(a.n, -1), std::vector<bool>(a.n, false),
                          stop_at_first, {}};
    matcher.search(0);
    return matcher.found;
}

// Edge ids grouped by endpoint pair.
std::map<std::array<VertexId, 2>, std::vector<EdgeId>> bundles(const Multigraph& g) {
    std::map<std::array<VertexId, 2>, std::vector<EdgeId>> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) out[g.ends(e)].push_back(e);
    return out;
}

// Yields every edge bijection compatible with the vertex map sigma by
// running a factorial odometer over the parallel bundles.
template <typename Fn>
bool for_each_edge_extension(const Multigraph& g1, const Multigraph& g2,
                             const std::vector<int>& sigma, Fn&& fn) {
    auto from = bundles(g1), to = bundles(g2);
    struct Slot {
        std::vector<EdgeId> src, dst, perm;
    };
    std::vector<Slot> slots;
    for (auto& [pair, src] : from) {
        std::array<VertexId, 2> target{sigma[pair[0]], sigma[pair[1]]};
        if (target[0] > target[1]) std::swap(target[0], target[1]);
        auto it = to.find(target);
        if (it == to.end() || it->second.size() != src.size()) return true; // incompatible sigma
        Slot slot{src, it->second, {}};
        slot.perm.resize(src.size());
        std::iota(slot.perm.begin(), slot.perm.end(), 0);
        slots.push_back(std::move(slot));
    }
    std::vector<EdgeId> edge_map(g1.edge_count());
    while (true) {
        for (const auto& slot : slots)
            for (size_t i = 0; i < slot.src.size(); ++i)
                edge_map[slot.src[i]] = slot.dst[slot.perm[i]];
        if (!fn(edge_map)) return false;
        // advance the odometer
        size_t s = 0;
        while (s < slots.size() && !std::next_permutation(slots[s].perm.begin(), slots[s].perm.end())) {
            std::iota(slots[s].perm.begin(), slots[s].perm.end(), 0);
            ++s;
        }
        if (s == slots.size()) return true;
    }
}

void check_cap(const Multigraph& g, const SizeGuards& guards) {
    if (g.vertex_count() + g.edge_count() > guards.aut_cap)
        throw CapExceeded("brute-force cap exceeded: |V|+|E| = " +
                          std::to_string(g.vertex_count() + g.edge_count()) + " > " +
                          std::to_string(guards.aut_cap));
}

} // namespace

std::vector<Automorphism> full_automorphism_group(const Multigraph& g, const SizeGuards& guards) {
    check_cap(g, guards);
    std::vector<Automorphism> out;
    for (const auto& sigma : vertex_bijections(g, g, false)) {
        bool ok = for_each_edge_extension(g, g, sigma, [&](const std::vector<EdgeId>& edge_map) {
            out.push_back(validate_automorphism(g, GraphMap{sigma, edge_map}));
            return static_cast<long long>(out.size()) <= guards.aut_count_cap;
        });
        if (!ok)
            throw CapExceeded("automorphism count cap exceeded (" +
                              std::to_string(guards.aut_count_cap) + ")");
    }
    return out;
}

long long automorphism_count(const Multigraph& g, const SizeGuards& guards) {
    check_cap(g, guards);
    long long total = 0;
    for (const auto& sigma : vertex_bijections(g, g, false)) {
        long long ways = 1;
        bool compatible = true;
        auto from = bundles(g);
        for (auto& [pair, src] : from) {
            std::array<VertexId, 2> target{sigma[pair[0]], sigma[pair[1]]};
            if (target[0] > target[1]) std::swap(target[0], target[1]);
            auto it = from.find(target);
            if (it == from.end() || it->second.size() != src.size()) { compatible = false; break; }
            for (size_t k = 2; k <= src.size(); ++k) ways *= static_cast<long long>(k);
        }
        if (compatible) total += ways;
    }
    return total;
}

std::optional<GraphMap> isomorphic(const Multigraph& g1, const Multigraph& g2,
                                   const SizeGuards& guards) {
    check_cap(g1, guards);
    check_cap(g2, guards);
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    for (const auto& sigma : vertex_bijections(g1, g2, true)) {
        std::optional<GraphMap> witness;
        for_each_edge_extension(g1, g2, sigma, [&](const std::vector<EdgeId>& edge_map) {
            witness = GraphMap{sigma, edge_map};
            return false; // first extension suffices
        });
        if (witness) return witness;
    }
    return std::nullopt;
}

std::vector<CyclicEdgeActionHit> find_cyclic_edge_actions(const Multigraph& g,
                                                          const SizeGuards& guards) {
    std::vector<CyclicEdgeActionHit> out;
    for (const auto& a : full_automorphism_group(g, guards)) {
        CyclicAction c = cyclic_action(a);
        ActionClassification cls = classify_action(c);
        if (cls.kind == ActionClass::Neither) continue;
        out.push_back({a, cls.kind, c.order, static_cast<int>(c.vertex_orbits.size()),
                       cls.degenerate});
    }
    return out;
}

namespace {

struct CanonSearch {
    const WeightedView& view;
    std::vector<int> order;      // order[i] = original vertex placed at position i
    std::vector<bool> placed;
    std::vector<int> best_code;  // row-major upper triangle of the best ordering
    std::vector<int> code;       // current partial code
    bool have_best = false;

    void search(int depth) {
        if (depth == view.n) {
            if (!have_best || code < best_code) {
                best_code = code;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < view.n; ++v) {
            if (placed[v]) continue;
            size_t mark = code.size();
            for (int i = 0; i < depth; ++i) code.push_back(view.mult[order[i]][v]);
            // prune: compare the extended prefix against the best
            bool viable = !have_best || std::lexicographical_compare(
                                            code.begin(), code.end(), best_code.begin(),
                                            best_code.begin() + static_cast<long>(code.size())) ||
                          std::equal(code.begin(), code.end(), best_code.begin());
            if (viable) {
                placed[v] = true;
                order[depth] = v;
                search(depth + 1);
                placed[v] = false;
            }
            code.resize(mark);
        }
    }
};

} // namespace

std::string canonical_form(const Multigraph& g) {
    WeightedView view(g);
    CanonSearch search{view, std::vector<int>(view.n, -1), std::vector<bool>(view.n, false), {}, {}, false};
    search.search(0);
    std::string out;
    out.push_back(static_cast<char>('0' + view.n));
    for (int m : search.best_code) out.push_back(static_cast<char>('a' + m));
    return out;
}

bool is_edge_transitive(const Multigraph& g, const SizeGuards& guards) {
    if (g.edge_count() == 0) return true;
    auto auts = full_automorphism_group(g, guards);
    std::vector<bool> reached(g.edge_count(), false);
    reached[0] = true;
    std::vector<EdgeId> stack{0};
    int count = 1;
    while (!stack.empty()) {
        EdgeId e = stack.back();
        stack.pop_back();
        for (const auto& a : auts) {
            EdgeId f = a.edge(e);
            if (!reached[f]) {
                reached[f] = true;
                ++count;
                stack.push_back(f);
            }
        }
    }
    return count == g.edge_count();
}

} // namespace eulersym
