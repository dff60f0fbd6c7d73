#include "eulersym/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "eulersym/extender_lift.hpp"

namespace eulersym {

namespace {

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

void require(bool ok, const std::string& constraint) {
    if (!ok) throw std::invalid_argument("family constraint violated: " + constraint);
}

std::string fmt(const char* head, std::initializer_list<int> xs) {
    std::string out = head;
    out += "[";
    bool first = true;
    for (int x : xs) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    }
    out += "]";
    return out;
}

// Edge images forced by a vertex map; valid only for graphs without
// parallel edges.
std::vector<EdgeId> derive_edge_map(const Multigraph& g, const std::vector<VertexId>& vmap) {
    std::map<std::array<VertexId, 2>, EdgeId> by_pair;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [it, fresh] = by_pair.try_emplace(g.ends(e), e);
        if (!fresh) throw std::logic_error("derive_edge_map needs a simple graph");
    }
    std::vector<EdgeId> emap(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = vmap[g.ends(e)[0]], v = vmap[g.ends(e)[1]];
        if (u > v) std::swap(u, v);
        emap[e] = by_pair.at({u, v});
    }
    return emap;
}

FamilyInstance finish(FamilySpec spec, Multigraph graph, GraphMap g_map, ExpectedAction expected,
                      std::vector<std::pair<std::string, GraphMap>> extras = {}) {
    auto shared = std::make_shared<Multigraph>(std::move(graph));
    FamilyInstance inst{std::move(spec), shared, validate_automorphism(*shared, std::move(g_map)),
                        {}, expected};
    for (auto& [name, map] : extras)
        inst.extra.emplace_back(name, validate_automorphism(*shared, std::move(map)));

    CyclicAction action = cyclic_action(inst.g);
    ActionClassification cls = classify_action(action);
    if (action.order != expected.order ||
        static_cast<int>(action.edge_orbits.size()) != expected.edge_orbit_count ||
        static_cast<int>(action.vertex_orbits.size()) != expected.vertex_orbit_count ||
        cls.kind != expected.kind)
        throw std::logic_error("family generator does not match its expected action for " +
                               inst.spec.describe());
    return inst;
}

FamilyInstance build_cycle_n(const FamilySpec& spec) {
    int n = spec.n;
    require(n >= 3, "CycleN needs n >= 3");
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, fmt("e", {i}));
    GraphMap m;
    for (int i = 0; i < n; ++i) m.vertex_image.push_back((i + 1) % n);
    for (int i = 0; i < n; ++i) m.edge_image.push_back((i + 1) % n);
    return finish(spec, std::move(g), std::move(m), {n, 1, 1, ActionClass::Regular});
}

FamilyInstance build_cycle_n_ext2(const FamilySpec& spec) {
    int n = spec.n;
    require(n >= 3, "CycleNExt2 needs n >= 3");
    Multigraph base(n);
    for (int i = 0; i < n; ++i) base.add_edge(i, (i + 1) % n, fmt("e", {i}));
    Multigraph g = extender(base, 2);
    GraphMap m;
    for (int i = 0; i < n; ++i) m.vertex_image.push_back((i + 1) % n);
    m.edge_image.resize(2 * n);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) m.edge_image[j * n + i] = j * n + (i + 1) % n;
    return finish(spec, std::move(g), std::move(m), {n, 2, 1, ActionClass::BiRegular});
}

struct CirculantClasses {
    // (representative z <= n/2, copies); each copy is one g-orbit of n edges
    std::vector<std::pair<int, int>> classes;
};

CirculantClasses normalize_circulant(int n, const std::vector<std::pair<int, int>>& s) {
    require(n >= 3, "Circulant needs n >= 3");
    std::map<int, int> mult;
    for (auto [z, m] : s) {
        int zz = mod(z, n);
        require(zz != 0, "circulant connection elements must be nonzero");
        require(m >= 1, "circulant multiplicities must be positive");
        mult[zz] += m;
    }
    for (auto [z, m] : mult)
        require(mult.count(mod(-z, n)) && mult.at(mod(-z, n)) == m, "circulant multiset must be self-inverse");
    CirculantClasses out;
    for (auto [z, m] : mult) {
        if (2 * z == n) {
            require(m % 2 == 0, "multiplicity of n/2 must be even");
            out.classes.emplace_back(z, m / 2);
        } else if (z < n - z) {
            out.classes.emplace_back(z, m);
        }
    }
    return out;
}

FamilyInstance build_circulant(const FamilySpec& spec) {
    int n = spec.n;
    auto classes = normalize_circulant(n, spec.circulant_s);
    require(!classes.classes.empty(), "circulant connection multiset must be nonempty");
    Multigraph g(n);
    int orbits = 0;
    for (auto [z, copies] : classes.classes) {
        for (int c = 0; c < copies; ++c, ++orbits)
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + z) % n, fmt("z", {z, c, i}));
    }
    GraphMap m;
    for (int i = 0; i < n; ++i) m.vertex_image.push_back((i + 1) % n);
    m.edge_image.resize(g.edge_count());
    for (int o = 0; o < orbits; ++o)
        for (int i = 0; i < n; ++i) m.edge_image[o * n + i] = o * n + (i + 1) % n;
    ActionClass kind = orbits == 1   ? ActionClass::Regular
                       : orbits == 2 ? ActionClass::BiRegular
                                     : ActionClass::Neither;
    return finish(spec, std::move(g), std::move(m), {n, orbits, 1, kind});
}

void validate_gamma_nab(int n, int a, int b) {
    require(n >= 3, "GammaNAB needs n >= 3");
    require(a != 0 && b != 0, "a and b must be nonzero mod n");
    require(std::gcd(std::gcd(n, a), b) == 1, "gcd(n,a,b) must be 1");
    require(n / std::gcd(n, a) >= 3, "additive order of a must be at least 3");
    if (2 * b % n != 0) {
        require(a != b && a != mod(-b, n), "a must differ from +-b");
    }
}

FamilyInstance build_gamma_nab(const FamilySpec& spec) {
    int n = spec.n, a = mod(spec.a, spec.n), b = mod(spec.b, spec.n);
    validate_gamma_nab(n, a, b);
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + a) % n, fmt("a", {i}));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + b) % n, fmt("b", {i}));
    GraphMap m;
    for (int i = 0; i < n; ++i) m.vertex_image.push_back((i + 1) % n);
    m.edge_image.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        m.edge_image[i] = (i + 1) % n;
        m.edge_image[n + i] = n + (i + 1) % n;
    }
    return finish(spec, std::move(g), std::move(m), {n, 2, 1, ActionClass::BiRegular});
}

FamilyInstance build_cst_cycle(const FamilySpec& spec) {
    int r = spec.r, s = spec.s, t = spec.t;
    require(r >= 2, "CstCycle needs r >= 2");
    require(s >= 1 && t >= 1 && s * t >= 2, "CstCycle needs st >= 2");
    require(std::gcd(s, t) == 1, "CstCycle needs gcd(s,t) = 1");
    int rs = r * s;
    auto vS = [&](int k, int i) { return k * s + i; };
    auto vT = [&](int k, int j) { return rs + k * t + j; };
    Multigraph g(r * (s + t));
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < t; ++j)
                g.add_edge(vS(k, i), vT(k, j), fmt("eS", {2 * k, i, j}));
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < t; ++j)
            for (int i = 0; i < s; ++i)
                g.add_edge(vT(k, j), vS((k + 1) % r, i), fmt("eT", {2 * k + 1, j, i}));

    std::vector<VertexId> gv(g.vertex_count());
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < s; ++i)
            gv[vS(k, i)] = k < r - 1 ? vS(k + 1, i) : vS(0, (i + 1) % s);
        for (int j = 0; j < t; ++j)
            gv[vT(k, j)] = k < r - 1 ? vT(k + 1, j) : vT(0, (j + 1) % t);
    }
    std::vector<VertexId> yv(g.vertex_count());
    for (int i = 0; i < s; ++i) yv[vS(0, i)] = vS(0, mod(-i, s));
    for (int k = 1; k < r; ++k)
        for (int i = 0; i < s; ++i) yv[vS(k, i)] = vS(r - k, mod(-i - 1, s));
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < t; ++j) yv[vT(k, j)] = vT(r - k - 1, mod(-j - 1, t));

    GraphMap gm{gv, derive_edge_map(g, gv)};
    GraphMap ym{yv, derive_edge_map(g, yv)};
    return finish(spec, std::move(g), std::move(gm),
                  {static_cast<long long>(r) * s * t, 2, 2, ActionClass::BiRegular},
                  {{"y", std::move(ym)}});
}

FamilyInstance build_kst(const FamilySpec& spec) {
    int s = spec.s, t = spec.t;
    require(s >= 1 && t >= 1 && s * t > 1, "Kst needs st > 1");
    require(std::gcd(s, t) == 1, "Kst needs gcd(s,t) = 1");
    Multigraph g(s + t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(i, s + j, fmt("e", {i, j}));
    GraphMap m;
    for (int i = 0; i < s; ++i) m.vertex_image.push_back((i + 1) % s);
    for (int j = 0; j < t; ++j) m.vertex_image.push_back(s + (j + 1) % t);
    m.edge_image.resize(s * t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) m.edge_image[i * t + j] = ((i + 1) % s) * t + (j + 1) % t;
    return finish(spec, std::move(g), std::move(m),
                  {static_cast<long long>(s) * t, 1, 2, ActionClass::Regular});
}

FamilyInstance build_k2_lambda(const FamilySpec& spec) {
    int lam = spec.n; // edge multiplicity stored in n
    require(lam >= 1, "K2Lambda needs lambda >= 1");
    Multigraph g(2);
    for (int i = 0; i < lam; ++i) g.add_edge(0, 1, fmt("e", {i}));
    GraphMap x{{0, 1}, {}};
    for (int i = 0; i < lam; ++i) x.edge_image.push_back((i + 1) % lam);
    GraphMap y{{1, 0}, {}};
    for (int i = 0; i < lam; ++i) y.edge_image.push_back(i);
    GraphMap xy{{1, 0}, x.edge_image};
    return finish(spec, std::move(g), std::move(x), {lam, 1, 2, ActionClass::Regular},
                  {{"y", std::move(y)}, {"xy", std::move(xy)}});
}

FamilyInstance build_ck(const FamilySpec& spec) {
    int r = spec.r, n = spec.n, t = spec.t;
    require(r >= 1 && t >= 1, "CK needs rt >= 1");
    require(n >= 2, "CK needs n >= 2");
    require(std::gcd(n * r, t) == 1, "CK needs gcd(nr,t) = 1");
    int rn = r * n;
    Multigraph g(rn + t);
    for (int k = 0; k < rn; ++k)
        for (int j = 0; j < t; ++j) g.add_edge(k, rn + j, fmt("e", {k, j}));
    for (int k = 0; k < rn; ++k)
        for (int j = 0; j < t; ++j) g.add_edge(k, (k + r) % rn, fmt("e1", {k, j}));
    GraphMap m;
    for (int k = 0; k < rn; ++k) m.vertex_image.push_back((k + 1) % rn);
    for (int j = 0; j < t; ++j) m.vertex_image.push_back(rn + (j + 1) % t);
    m.edge_image.resize(2 * rn * t);
    for (int k = 0; k < rn; ++k)
        for (int j = 0; j < t; ++j) {
            int next = ((k + 1) % rn) * t + (j + 1) % t;
            m.edge_image[k * t + j] = next;
            m.edge_image[rn * t + k * t + j] = rn * t + next;
        }
    return finish(spec, std::move(g), std::move(m),
                  {static_cast<long long>(r) * n * t, 2, 2, ActionClass::BiRegular});
}

FamilyInstance build_ck2(const FamilySpec& spec) {
    int r = spec.r, s = spec.s, t = spec.t, u = spec.u;
    require(r >= 1 && s >= 1 && t >= 1, "CK2 parameters must be positive");
    require(u >= 2, "CK2 needs u >= 2");
    require(std::gcd(r, u) == 1, "CK2 needs gcd(r,u) = 1");
    require(std::gcd(s * r, t) == 1, "CK2 needs gcd(sr,t) = 1");
    int sru = s * r * u, ut = u * t, sr = s * r, su = s * u;
    Multigraph g(sru + ut);
    auto e0_id = [&](int i, int k, int j) { return (i * sr + k) * t + j; };
    auto e1_id = [&](int l, int k, int j) { return sru * t + (l * su + k) * t + j; };
    for (int i = 0; i < u; ++i)
        for (int k = 0; k < sr; ++k)
            for (int j = 0; j < t; ++j)
                g.add_edge((i + u * k) % sru, sru + (i + u * j) % ut, fmt("e", {i, k, j}));
    for (int l = 0; l < r; ++l)
        for (int k = 0; k < su; ++k)
            for (int j = 0; j < t; ++j)
                g.add_edge((l + r * k) % sru, (l + r * (k + 1)) % sru, fmt("e1", {l, k, j}));

    GraphMap m;
    for (int v = 0; v < sru; ++v) m.vertex_image.push_back((v + 1) % sru);
    for (int v = 0; v < ut; ++v) m.vertex_image.push_back(sru + (v + 1) % ut);
    m.edge_image.resize(g.edge_count());
    for (int i = 0; i < u; ++i)
        for (int k = 0; k < sr; ++k)
            for (int j = 0; j < t; ++j) {
                int v1 = (i + u * k + 1) % sru;
                int v2 = (i + u * j + 1) % ut;
                // relabel by the unique decomposition; the carries are
                // forced by incidence since [E0] is simple
                m.edge_image[e0_id(i, k, j)] = e0_id(v1 % u, v1 / u, v2 / u);
            }
    for (int l = 0; l < r; ++l)
        for (int k = 0; k < su; ++k)
            for (int j = 0; j < t; ++j) {
                int l2 = l < r - 1 ? l + 1 : 0;
                int k2 = l < r - 1 ? k : (k + 1) % su;
                // superscript advances once per full (l,k) cycle, which
                // keeps <g> regular on E1 even when gcd(u,t) > 1
                int j2 = (l == r - 1 && k == su - 1) ? (j + 1) % t : j;
                m.edge_image[e1_id(l, k, j)] = e1_id(l2, k2, j2);
            }
    return finish(spec, std::move(g), std::move(m),
                  {static_cast<long long>(s) * r * u * t, 2, 2, ActionClass::BiRegular});
}

FamilyInstance build_kk(const FamilySpec& spec) {
    int r = spec.r, rp = spec.rp, s = spec.s, t = spec.t, tp = spec.tp, u = spec.u;
    require(r >= 1 && rp >= 1 && s >= 1 && t >= 1 && tp >= 1 && u >= 1,
            "KK parameters must be positive");
    require(std::gcd(r, rp) == 1, "KK needs gcd(r,r') = 1");
    require(std::gcd(t, tp) == 1, "KK needs gcd(t,t') = 1");
    require(std::gcd(s * r, u * t) == 1, "KK needs gcd(sr,ut) = 1");
    require(std::gcd(s * rp, u * tp) == 1, "KK needs gcd(sr',ut') = 1");
    int n1 = r * u * tp, n2 = s * r * rp, n3 = rp * u * t;
    int utp = u * tp, srp = s * rp, ut = u * t, sr = s * r;
    long long e0_count = static_cast<long long>(r) * utp * srp * t;
    Multigraph g(n1 + n2 + n3);
    auto e0_id = [&](int i, int l, int k, int j) { return ((i * utp + l) * srp + k) * t + j; };
    auto e1_id = [&](int i, int l, int k, int j) {
        return static_cast<int>(e0_count) + ((i * ut + l) * sr + k) * tp + j;
    };
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < utp; ++l)
            for (int k = 0; k < srp; ++k)
                for (int j = 0; j < t; ++j)
                    g.add_edge(i + r * l, n1 + i + r * k, fmt("e0", {i, l, k, j}));
    for (int i = 0; i < rp; ++i)
        for (int l = 0; l < ut; ++l)
            for (int k = 0; k < sr; ++k)
                for (int j = 0; j < tp; ++j)
                    g.add_edge(n1 + n2 + i + rp * l, n1 + i + rp * k, fmt("e1", {i, l, k, j}));

    GraphMap m;
    for (int v = 0; v < n1; ++v) m.vertex_image.push_back((v + 1) % n1);
    for (int v = 0; v < n2; ++v) m.vertex_image.push_back(n1 + (v + 1) % n2);
    for (int v = 0; v < n3; ++v) m.vertex_image.push_back(n1 + n2 + (v + 1) % n3);
    m.edge_image.resize(g.edge_count());
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < utp; ++l)
            for (int k = 0; k < srp; ++k)
                for (int j = 0; j < t; ++j) {
                    int v1 = (i + r * l + 1) % n1;
                    int v2 = (i + r * k + 1) % n2;
                    int j2 = (i == r - 1 && l == utp - 1 && k == srp - 1) ? (j + 1) % t : j;
                    m.edge_image[e0_id(i, l, k, j)] = e0_id(v1 % r, v1 / r, v2 / r, j2);
                }
    for (int i = 0; i < rp; ++i)
        for (int l = 0; l < ut; ++l)
            for (int k = 0; k < sr; ++k)
                for (int j = 0; j < tp; ++j) {
                    int v3 = (i + rp * l + 1) % n3;
                    int v2 = (i + rp * k + 1) % n2;
                    int j2 = (i == rp - 1 && l == ut - 1 && k == sr - 1) ? (j + 1) % tp : j;
                    m.edge_image[e1_id(i, l, k, j)] = e1_id(v3 % rp, v3 / rp, v2 / rp, j2);
                }
    return finish(spec, std::move(g), std::move(m),
                  {static_cast<long long>(s) * r * rp * u * t * tp, 2, 3, ActionClass::BiRegular});
}

FamilyInstance build_base(const FamilySpec& spec) {
    switch (spec.tag) {
        case FamilyTag::CycleN: return build_cycle_n(spec);
        case FamilyTag::CycleNExt2: return build_cycle_n_ext2(spec);
        case FamilyTag::Circulant: return build_circulant(spec);
        case FamilyTag::GammaNAB: return build_gamma_nab(spec);
        case FamilyTag::Gamma2r1r: {
            require(spec.r >= 2, "Gamma2r1r needs r >= 2");
            FamilySpec inner = spec;
            inner.n = 2 * spec.r;
            inner.a = 1;
            inner.b = spec.r;
            FamilyInstance inst = build_gamma_nab(inner);
            inst.spec = spec;
            return inst;
        }
        case FamilyTag::Gamma2r2r: {
            require(spec.r >= 3 && spec.r % 2 == 1, "Gamma2r2r needs odd r >= 3");
            FamilySpec inner = spec;
            inner.n = 2 * spec.r;
            inner.a = 2;
            inner.b = spec.r;
            FamilyInstance inst = build_gamma_nab(inner);
            inst.spec = spec;
            return inst;
        }
        case FamilyTag::CstCycle: return build_cst_cycle(spec);
        case FamilyTag::Kst: return build_kst(spec);
        case FamilyTag::K2Lambda: return build_k2_lambda(spec);
        case FamilyTag::CK: return build_ck(spec);
        case FamilyTag::CK2: return build_ck2(spec);
        case FamilyTag::KK: return build_kk(spec);
    }
    throw std::invalid_argument("unknown family tag");
}

} // namespace

FamilyInstance build(const FamilySpec& spec) {
    require(spec.lambda >= 1, "outer lambda must be positive");
    FamilySpec base_spec = spec;
    base_spec.lambda = 1;
    FamilyInstance base = build_base(base_spec);
    if (spec.lambda == 1) return base;
    if (base.expected.kind == ActionClass::Neither)
        throw std::invalid_argument(
            "outer lambda requires a regular or bi-regular base action for " + spec.describe());
    LiftedAutomorphism lifted =
        lift_automorphism(*base.graph, base.g, spec.lambda, base.expected.kind);
    FamilyInstance inst{spec, lifted.extended, std::move(lifted.map), {}, base.expected};
    inst.expected.order *= spec.lambda;
    CyclicAction action = cyclic_action(inst.g);
    if (action.order != inst.expected.order ||
        static_cast<int>(action.edge_orbits.size()) != inst.expected.edge_orbit_count ||
        static_cast<int>(action.vertex_orbits.size()) != inst.expected.vertex_orbit_count)
        throw std::logic_error("lifted family generator does not match its expected action for " +
                               spec.describe());
    return inst;
}

const char* to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::CycleN: return "CycleN";
        case FamilyTag::CycleNExt2: return "CycleNExt2";
        case FamilyTag::Circulant: return "Circulant";
        case FamilyTag::GammaNAB: return "GammaNAB";
        case FamilyTag::Gamma2r1r: return "Gamma2r1r";
        case FamilyTag::Gamma2r2r: return "Gamma2r2r";
        case FamilyTag::CstCycle: return "CstCycle";
        case FamilyTag::Kst: return "Kst";
        case FamilyTag::K2Lambda: return "K2Lambda";
        case FamilyTag::CK: return "CK";
        case FamilyTag::CK2: return "CK2";
        case FamilyTag::KK: return "KK";
    }
    return "?";
}

FamilySpec FamilySpec::cycle_n(int n, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::CycleN;
    s.n = n;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::cycle_n_ext2(int n, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::CycleNExt2;
    s.n = n;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::circulant(int n, std::vector<std::pair<int, int>> conn, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::Circulant;
    s.n = n;
    s.circulant_s = std::move(conn);
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::gamma_nab(int n, int a, int b, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::GammaNAB;
    s.n = n;
    s.a = a;
    s.b = b;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::gamma_2r_1r(int r, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::Gamma2r1r;
    s.r = r;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::gamma_2r_2r(int r, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::Gamma2r2r;
    s.r = r;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::cst_cycle(int r, int s_, int t, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::CstCycle;
    s.r = r;
    s.s = s_;
    s.t = t;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::kst(int s_, int t, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::Kst;
    s.s = s_;
    s.t = t;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::k2_lambda(int lambda_edges, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::K2Lambda;
    s.n = lambda_edges;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::ck(int r, int n, int t, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::CK;
    s.r = r;
    s.n = n;
    s.t = t;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::ck2(int r, int s_, int t, int u, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::CK2;
    s.r = r;
    s.s = s_;
    s.t = t;
    s.u = u;
    s.lambda = lambda;
    return s;
}
FamilySpec FamilySpec::kk(int r, int rp, int s_, int t, int tp, int u, int lambda) {
    FamilySpec s;
    s.tag = FamilyTag::KK;
    s.r = r;
    s.rp = rp;
    s.s = s_;
    s.t = t;
    s.tp = tp;
    s.u = u;
    s.lambda = lambda;
    return s;
}

std::string FamilySpec::describe() const {
    std::string out = to_string(tag);
    out += "(";
    switch (tag) {
        case FamilyTag::CycleN:
        case FamilyTag::CycleNExt2:
        case FamilyTag::K2Lambda: out += std::to_string(n); break;
        case FamilyTag::Circulant: {
            out += std::to_string(n) + ",{";
            bool first = true;
            for (auto [z, m] : circulant_s) {
                if (!first) out += ",";
                out += std::to_string(z);
                if (m > 1) out += "^(" + std::to_string(m) + ")";
                first = false;
            }
            out += "}";
            break;
        }
        case FamilyTag::GammaNAB:
            out += std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b);
            break;
        case FamilyTag::Gamma2r1r:
        case FamilyTag::Gamma2r2r: out += std::to_string(r); break;
        case FamilyTag::CstCycle:
            out += std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t);
            break;
        case FamilyTag::Kst: out += std::to_string(s) + "," + std::to_string(t); break;
        case FamilyTag::CK:
            out += std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(t);
            break;
        case FamilyTag::CK2:
            out += std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + "," +
                   std::to_string(u);
            break;
        case FamilyTag::KK:
            out += std::to_string(r) + "," + std::to_string(rp) + "," + std::to_string(s) + "," +
                   std::to_string(t) + "," + std::to_string(tp) + "," + std::to_string(u);
            break;
    }
    out += ")";
    if (lambda > 1) out += "^(" + std::to_string(lambda) + ")";
    return out;
}

namespace {

struct SizeOf {
    long long vertices;
    long long edges;
};

SizeOf base_size(const FamilySpec& s) {
    switch (s.tag) {
        case FamilyTag::CycleN: return {s.n, s.n};
        case FamilyTag::CycleNExt2: return {s.n, 2LL * s.n};
        case FamilyTag::GammaNAB: return {s.n, 2LL * s.n};
        case FamilyTag::Gamma2r1r:
        case FamilyTag::Gamma2r2r: return {2LL * s.r, 4LL * s.r};
        case FamilyTag::CstCycle: return {static_cast<long long>(s.r) * (s.s + s.t), 2LL * s.r * s.s * s.t};
        case FamilyTag::Kst: return {s.s + s.t, static_cast<long long>(s.s) * s.t};
        case FamilyTag::K2Lambda: return {2, s.n};
        case FamilyTag::CK: return {static_cast<long long>(s.r) * s.n + s.t, 2LL * s.r * s.n * s.t};
        case FamilyTag::CK2:
            return {static_cast<long long>(s.s) * s.r * s.u + static_cast<long long>(s.u) * s.t,
                    2LL * s.s * s.r * s.u * s.t};
        case FamilyTag::KK:
            return {static_cast<long long>(s.r) * s.u * s.tp +
                        static_cast<long long>(s.s) * s.r * s.rp +
                        static_cast<long long>(s.rp) * s.u * s.t,
                    2LL * s.s * s.r * s.rp * s.u * s.t * s.tp};
        default: return {0, 0};
    }
}

} // namespace

std::vector<FamilySpec> enumerate_specs(const SpecBounds& bounds) {
    auto wanted = [&](FamilyTag tag) {
        return bounds.families.empty() ||
               std::find(bounds.families.begin(), bounds.families.end(), tag) !=
                   bounds.families.end();
    };
    std::vector<FamilySpec> base;
    long long maxV = bounds.max_vertices, maxE = bounds.max_edges;
    if (wanted(FamilyTag::CycleN))
        for (int n = 3; n <= maxV && n <= maxE; ++n) base.push_back(FamilySpec::cycle_n(n));
    if (wanted(FamilyTag::CycleNExt2))
        for (int n = 3; n <= maxV && 2 * n <= maxE; ++n)
            base.push_back(FamilySpec::cycle_n_ext2(n));
    if (wanted(FamilyTag::GammaNAB))
        for (int n = 3; n <= maxV && 2 * n <= maxE; ++n)
            for (int a = 1; a < n; ++a)
                for (int b = 1; b < n; ++b) {
                    try {
                        validate_gamma_nab(n, a, b);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    base.push_back(FamilySpec::gamma_nab(n, a, b));
                }
    if (wanted(FamilyTag::Gamma2r1r))
        for (int r = 2; 2 * r <= maxV && 4 * r <= maxE; ++r)
            base.push_back(FamilySpec::gamma_2r_1r(r));
    if (wanted(FamilyTag::Gamma2r2r))
        for (int r = 3; 2 * r <= maxV && 4 * r <= maxE; r += 2)
            base.push_back(FamilySpec::gamma_2r_2r(r));
    if (wanted(FamilyTag::CstCycle))
        for (int r = 2; 2 * r <= maxV; ++r)
            for (int s = 1; static_cast<long long>(r) * (s + 1) <= maxV; ++s)
                for (int t = 1; static_cast<long long>(r) * (s + t) <= maxV; ++t) {
                    if (s * t < 2 || std::gcd(s, t) != 1) continue;
                    if (2LL * r * s * t > maxE) continue;
                    base.push_back(FamilySpec::cst_cycle(r, s, t));
                }
    if (wanted(FamilyTag::Kst))
        for (int s = 1; s < maxV; ++s)
            for (int t = 1; s + t <= maxV; ++t) {
                if (s * t < 2 || std::gcd(s, t) != 1 ||
                    static_cast<long long>(s) * t > maxE)
                    continue;
                base.push_back(FamilySpec::kst(s, t));
            }
    if (wanted(FamilyTag::K2Lambda) && maxV >= 2)
        for (int lam = 1; lam <= maxE; ++lam) base.push_back(FamilySpec::k2_lambda(lam));
    if (wanted(FamilyTag::CK))
        for (int r = 1; r <= maxV; ++r)
            for (int n = 2; static_cast<long long>(r) * n < maxV + 1; ++n)
                for (int t = 1; static_cast<long long>(r) * n + t <= maxV; ++t) {
                    if (std::gcd(n * r, t) != 1 || 2LL * r * n * t > maxE) continue;
                    base.push_back(FamilySpec::ck(r, n, t));
                }
    if (wanted(FamilyTag::CK2))
        for (int r = 1; r <= maxV; ++r)
            for (int s = 1; static_cast<long long>(s) * r <= maxV; ++s)
                for (int u = 2; static_cast<long long>(s) * r * u <= maxV; ++u)
                    for (int t = 1;
                         static_cast<long long>(s) * r * u + static_cast<long long>(u) * t <= maxV;
                         ++t) {
                        if (std::gcd(r, u) != 1 || std::gcd(s * r, t) != 1) continue;
                        if (2LL * s * r * u * t > maxE) continue;
                        base.push_back(FamilySpec::ck2(r, s, t, u));
                    }
    if (wanted(FamilyTag::KK)) {
        // 2*r*rp*s*t*tp*u <= maxE bounds every nested product
        long long cap = maxE / 2;
        for (int r = 1; r <= cap; ++r)
            for (int rp = 1; static_cast<long long>(r) * rp <= cap; ++rp)
                for (int s = 1; static_cast<long long>(r) * rp * s <= cap; ++s)
                    for (int t = 1; static_cast<long long>(r) * rp * s * t <= cap; ++t)
                        for (int tp = 1; static_cast<long long>(r) * rp * s * t * tp <= cap; ++tp)
                            for (int u = 1;
                                 static_cast<long long>(r) * rp * s * t * tp * u <= cap; ++u) {
                                FamilySpec spec = FamilySpec::kk(r, rp, s, t, tp, u);
                                SizeOf size = base_size(spec);
                                if (size.vertices > maxV || size.edges > maxE) continue;
                                if (std::gcd(r, rp) != 1 || std::gcd(t, tp) != 1 ||
                                    std::gcd(s * r, u * t) != 1 || std::gcd(s * rp, u * tp) != 1)
                                    continue;
                                base.push_back(spec);
                            }
    }
    std::vector<FamilySpec> out;
    for (const FamilySpec& spec : base) {
        SizeOf size = base_size(spec);
        if (size.vertices > maxV || size.edges > maxE || size.edges == 0) continue;
        out.push_back(spec);
        if (!bounds.include_outer_lambda) continue;
        for (int lam = 2; size.edges * lam <= maxE; ++lam) {
            FamilySpec lifted = spec;
            lifted.lambda = lam;
            out.push_back(lifted);
        }
    }
    return out;
}

std::vector<FamilySpec> recognize(const Multigraph& g, const CyclicAction& c,
                                  const SizeGuards& guards) {
    ActionClassification cls = classify_action(c);
    if (cls.kind == ActionClass::Neither)
        throw std::invalid_argument("recognize requires a Regular or BiRegular action");
    if (!g.is_connected()) throw std::invalid_argument("recognize requires a connected graph");
    if (g.vertex_count() < 3) throw std::invalid_argument("recognize requires |V| >= 3");
    if (g.vertex_count() + g.edge_count() > guards.aut_cap)
        throw CapExceeded("graph too large for the isomorphism oracle");

    auto fingerprint = [](const Multigraph& h) {
        std::vector<int> degs = h.degree_sequence();
        std::sort(degs.begin(), degs.end());
        std::map<std::array<VertexId, 2>, int> mult;
        for (EdgeId e = 0; e < h.edge_count(); ++e) ++mult[h.ends(e)];
        std::vector<int> mults;
        for (auto& [pair, m] : mult) mults.push_back(m);
        std::sort(mults.begin(), mults.end());
        return std::pair{degs, mults};
    };
    auto target = fingerprint(g);

    SpecBounds bounds;
    bounds.max_vertices = g.vertex_count();
    bounds.max_edges = g.edge_count();
    std::vector<FamilySpec> out;
    for (const FamilySpec& spec : enumerate_specs(bounds)) {
        SizeOf size = base_size(spec);
        if (size.vertices != g.vertex_count() || size.edges * spec.lambda != g.edge_count())
            continue;
        FamilyInstance inst = build(spec);
        if (fingerprint(*inst.graph) != target) continue;
        if (isomorphic(*inst.graph, g, guards)) out.push_back(spec);
    }
    return out;
}

} // namespace eulersym
