#include "eulersym/euler_construct.hpp"

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

bool same_structure(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (EdgeId e = 0; e < a.edge_count(); ++e)
        if (a.ends(e) != b.ends(e)) return false;
    return true;
}

Automorphism rebind(const Multigraph& host, const Automorphism& a) {
    return validate_automorphism(host, GraphMap{a.vertex_image(), a.edge_image()});
}

struct BaseCertificate {
    EdgeCycle cycle;
    std::vector<std::pair<LiftKind, Automorphism>> inducers;
    HShape claimed = HShape::Other;
};

// Lifts a lambda=1 certificate to the instance graph, or rebinds it
// when lambda=1. The inducers are keyed by the lift row they use.
EulerCertificate assemble(const FamilyInstance& instance, const Multigraph& base,
                          BaseCertificate cert, int lambda) {
    EulerCertificate out;
    out.graph = instance.graph;
    out.claimed_shape = cert.claimed;
    if (lambda == 1) {
        if (!same_structure(base, *instance.graph))
            throw std::logic_error("certificate base does not match the instance graph");
        out.cycle = cert.cycle;
        for (auto& [kind, aut] : cert.inducers)
            out.inducers.emplace_back(lift_target(kind, cert.cycle.length()),
                                      rebind(*instance.graph, aut));
        return out;
    }
    bool have_cycle = false;
    for (auto& [kind, aut] : cert.inducers) {
        LiftedCycleSymmetry lifted = lift_cycle_symmetry(base, cert.cycle, aut, kind, lambda);
        if (!have_cycle) {
            if (!same_structure(*lifted.extended, *instance.graph))
                throw std::logic_error("lifted certificate does not match the instance graph");
            out.cycle = lifted.cycle;
            have_cycle = true;
        }
        out.inducers.emplace_back(lift_target(kind, cert.cycle.length() * lambda),
                                  rebind(*instance.graph, lifted.map));
    }
    return out;
}

// Verifies each inducer matches its element and phi^2 is present.
void check_certificate(const EulerCertificate& cert) {
    const Multigraph& g = *cert.graph;
    if (!is_euler(g, cert.cycle)) throw std::logic_error("certificate cycle is not Euler");
    bool has_phi2 = false;
    for (const auto& [elt, aut] : cert.inducers) {
        auto induced = induced_elements(g, cert.cycle, aut);
        if (std::find(induced.begin(), induced.end(), elt) == induced.end())
            throw std::logic_error("inducer does not realize " + element_name(elt));
        if (!elt.reflected && elt.shift == 2 % elt.ell) has_phi2 = true;
    }
    if (!has_phi2) throw std::logic_error("certificate lacks a phi^2 inducer");
}

EulerSearchResult finish(const FamilyInstance& instance, const Multigraph& base,
                         BaseCertificate cert, int lambda) {
    EulerCertificate full = assemble(instance, base, std::move(cert), lambda);
    check_certificate(full);
    return EulerSearchResult::exists(std::move(full));
}

// ---- C_n^(lambda) -------------------------------------------------

EulerSearchResult construct_cycle_n(const FamilyInstance& instance, int n, int lambda) {
    FamilyInstance base = build(FamilySpec::cycle_n(n));
    std::vector<EdgeId> edges(n);
    std::iota(edges.begin(), edges.end(), 0);
    BaseCertificate cert;
    cert.cycle = make_cycle(*base.graph, edges, 0);
    cert.claimed = HShape::DC;

    std::vector<VertexId> yv(n);
    for (int v = 0; v < n; ++v) yv[v] = mod(-v, n);
    std::vector<EdgeId> ye(n);
    for (int i = 0; i < n; ++i) ye[i] = mod(-1 - i, n);
    Automorphism y = validate_automorphism(*base.graph, GraphMap{yv, ye});

    cert.inducers.emplace_back(LiftKind::Phi2, power(base.g, 2));
    cert.inducers.emplace_back(LiftKind::Tau, y);
    cert.inducers.emplace_back(LiftKind::Phi, base.g);
    return finish(instance, *base.graph, std::move(cert), lambda);
}

// ---- K_{s,t}^(lambda), lambda even --------------------------------

EulerSearchResult construct_kst(const FamilyInstance& instance, int s, int t, int lambda) {
    if (lambda % 2 != 0) return EulerSearchResult::not_exists(EulerObstruction::LambdaOdd);
    FamilyInstance base1 = build(FamilySpec::kst(s, t));
    Multigraph ext2 = extender(*base1.graph, 2);
    int st = s * t;

    std::vector<EdgeId> edges;
    for (int i = 0; i < st; ++i) {
        edges.push_back((i % s) * t + (i % t));            // e_{i,i}^1
        edges.push_back(st + ((i + 1) % s) * t + (i % t)); // e_{i+1,i}^2
    }
    BaseCertificate cert;
    cert.cycle = make_cycle(ext2, edges, 0);
    cert.claimed = HShape::Phi2Tau;

    // diagonal action on the two copies, inducing phi^2
    std::vector<EdgeId> diag(2 * st);
    for (int c = 0; c < 2; ++c)
        for (int x = 0; x < st; ++x) diag[c * st + x] = c * st + base1.g.edge(x);
    Automorphism g2 = validate_automorphism(ext2, GraphMap{base1.g.vertex_image(), diag});

    // vertex reflection S_i -> S_{-i}, T_j -> T_{-j-1} with copy swap,
    // inducing tau (edge reflections are impossible here: they would
    // swap the two biparts)
    std::vector<VertexId> yv(s + t);
    for (int i = 0; i < s; ++i) yv[i] = mod(-i, s);
    for (int j = 0; j < t; ++j) yv[s + j] = s + mod(-j - 1, t);
    std::vector<EdgeId> ye(2 * st);
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < t; ++b)
                ye[c * st + a * t + b] = (1 - c) * st + mod(-a, s) * t + mod(-b - 1, t);
    Automorphism y = validate_automorphism(ext2, GraphMap{yv, ye});

    cert.inducers.emplace_back(LiftKind::Phi2, g2);
    cert.inducers.emplace_back(LiftKind::Tau, y);
    return finish(instance, ext2, std::move(cert), lambda / 2);
}

// ---- K_2^(lambda), lambda even ------------------------------------

EulerSearchResult construct_k2(const FamilyInstance& instance, int lambda_total) {
    if (lambda_total % 2 != 0) return EulerSearchResult::not_exists(EulerObstruction::LambdaOdd);
    const Multigraph& g = *instance.graph;
    std::vector<EdgeId> edges(lambda_total);
    std::iota(edges.begin(), edges.end(), 0);
    EulerCertificate cert;
    cert.graph = instance.graph;
    cert.cycle = make_cycle(g, edges, 0);
    cert.claimed_shape = HShape::DC;

    std::vector<EdgeId> xe(lambda_total), ze(lambda_total);
    for (int i = 0; i < lambda_total; ++i) {
        xe[i] = (i + 1) % lambda_total;
        ze[i] = mod(-i, lambda_total);
    }
    Automorphism x = validate_automorphism(g, GraphMap{{0, 1}, xe});
    Automorphism z = validate_automorphism(g, GraphMap{{0, 1}, ze});
    cert.inducers.emplace_back(DihedralElement::phi(lambda_total), x);
    cert.inducers.emplace_back(DihedralElement::phi_squared(lambda_total), power(x, 2));
    cert.inducers.emplace_back(DihedralElement{lambda_total, 0, true}, z);
    check_certificate(cert);
    return EulerSearchResult::exists(std::move(cert));
}

// ---- circulants ----------------------------------------------------

// Locates the instance's edge ids for the two connection classes so
// one construction serves both the GammaNAB and Circulant layouts.
struct CircFrame {
    int n = 0, a = 0, b = 0;
    int offset_a = 0, offset_b = 0;
    EdgeId edge_a(int i) const { return offset_a + mod(i, n); }
    EdgeId edge_b(int i) const { return offset_b + mod(i, n); }
};

std::optional<CircFrame> circ_frame(const FamilySpec& spec) {
    CircFrame f;
    if (spec.tag == FamilyTag::GammaNAB || spec.tag == FamilyTag::Gamma2r1r ||
        spec.tag == FamilyTag::Gamma2r2r) {
        if (spec.tag == FamilyTag::GammaNAB) {
            f.n = spec.n;
            f.a = mod(spec.a, spec.n);
            f.b = mod(spec.b, spec.n);
        } else {
            f.n = 2 * spec.r;
            f.a = spec.tag == FamilyTag::Gamma2r1r ? 1 : 2;
            f.b = spec.r;
        }
        f.offset_a = 0;
        f.offset_b = f.n;
        return f;
    }
    if (spec.tag != FamilyTag::Circulant) return std::nullopt;
    // accept exactly the Gamma(n,a,b) shapes, matching build_circulant's
    // id layout (classes in sorted representative order, reps <= n/2)
    std::vector<std::pair<int, int>> classes; // (rep, copies) in id order
    {
        std::map<int, int> mult;
        for (auto [z, m] : spec.circulant_s) mult[mod(z, spec.n)] += m;
        for (auto [z, m] : mult) {
            if (2 * z == spec.n) classes.emplace_back(z, m / 2);
            else if (z < spec.n - z) classes.emplace_back(z, m);
        }
    }
    if (classes.size() != 2 || classes[0].second != 1 || classes[1].second != 1)
        return std::nullopt;
    f.n = spec.n;
    // the half-turn class, if any, goes in the b slot
    f.a = classes[0].first;
    f.offset_a = 0;
    f.b = classes[1].first;
    f.offset_b = f.n;
    if (2 * f.a == f.n) {
        std::swap(f.a, f.b);
        std::swap(f.offset_a, f.offset_b);
    }
    if (std::gcd(std::gcd(f.n, f.a), f.b) != 1) return std::nullopt;
    return f;
}

// Gamma(2r,a,r): interleave the a-edges along x = g^{r+a}.
EulerSearchResult construct_half_turn(const FamilyInstance& instance, const Multigraph& base,
                                      const Automorphism& base_g, const CircFrame& f, int lambda) {
    int n = f.n, r = n / 2, a = f.a;
    if (a % 2 == 1 && r % 2 == 1)
        return EulerSearchResult::not_exists(EulerObstruction::RMustBeEven);
    int step = r + a;
    std::vector<EdgeId> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back(f.edge_a(i * step));
        edges.push_back(f.edge_b(i * step + a));
    }
    EdgeCycle cycle = make_cycle(base, edges, 0);
    // rotate by one so the vertex map v -> a-v lands on phi*tau
    std::vector<EdgeId> rotated(cycle.edges.begin() + 1, cycle.edges.end());
    rotated.push_back(cycle.edges.front());
    BaseCertificate cert;
    cert.cycle = make_cycle(base, rotated, cycle.vertex_chain[1]);
    cert.claimed = HShape::Phi2PhiTau;

    std::vector<VertexId> yv(n);
    for (int v = 0; v < n; ++v) yv[v] = mod(a - v, n);
    std::vector<EdgeId> ye(2 * n);
    int l = cert.cycle.length();
    for (int p = 0; p < l; ++p)
        ye[cert.cycle.edges[p]] = cert.cycle.edges[mod(l - 2 - p, l)];
    Automorphism y = validate_automorphism(base, GraphMap{yv, ye});

    cert.inducers.emplace_back(LiftKind::Phi2, power(base_g, step));
    cert.inducers.emplace_back(LiftKind::PhiTau, y);
    return finish(instance, base, std::move(cert), lambda);
}

// Circ(n,{a,-a,b,-b}): interleave the two edge classes along
// x = g^(a+b) or g^(a-b), whichever power generates.
EulerSearchResult construct_circ4(const FamilyInstance& instance, const Multigraph& base,
                                  const Automorphism& base_g, const CircFrame& f, int lambda,
                                  const SizeGuards& guards) {
    int n = f.n, a = f.a, b = f.b;
    int j = 0;
    bool plus = false;
    if (std::gcd(n, mod(a + b, n)) == 1) {
        j = mod(a + b, n);
        plus = true;
    } else if (std::gcd(n, mod(a - b, n)) == 1) {
        j = mod(a - b, n);
    } else {
        try {
            if (is_edge_transitive(base, guards))
                return EulerSearchResult::open(UndeterminedReason::EdgeTransitiveGcdOpen);
        } catch (const CapExceeded&) {
            return EulerSearchResult::open(UndeterminedReason::OracleCapExceeded);
        }
        return EulerSearchResult::not_exists(EulerObstruction::GcdCondition);
    }
    std::vector<EdgeId> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back(f.edge_a(i * j));
        edges.push_back(plus ? f.edge_b(i * j + a) : f.edge_b((i + 1) * j));
    }
    EdgeCycle cycle = make_cycle(base, edges, 0);
    std::vector<EdgeId> rotated(cycle.edges.begin() + 1, cycle.edges.end());
    rotated.push_back(cycle.edges.front());
    BaseCertificate cert;
    cert.cycle = make_cycle(base, rotated, cycle.vertex_chain[1]);
    cert.claimed = HShape::Phi2PhiTau;

    std::vector<VertexId> yv(n);
    for (int v = 0; v < n; ++v) yv[v] = mod(a - v, n);
    Automorphism y = [&] {
        // the graph is simple, so the vertex reflection determines the
        // edge images
        std::map<std::array<VertexId, 2>, EdgeId> by_pair;
        for (EdgeId e = 0; e < base.edge_count(); ++e) by_pair.emplace(base.ends(e), e);
        std::vector<EdgeId> ye(base.edge_count());
        for (EdgeId e = 0; e < base.edge_count(); ++e) {
            VertexId u = yv[base.ends(e)[0]], v = yv[base.ends(e)[1]];
            if (u > v) std::swap(u, v);
            ye[e] = by_pair.at({u, v});
        }
        return validate_automorphism(base, GraphMap{yv, ye});
    }();

    cert.inducers.emplace_back(LiftKind::Phi2, power(base_g, j));
    cert.inducers.emplace_back(LiftKind::PhiTau, y);
    return finish(instance, base, std::move(cert), lambda);
}

// ---- C_2r[sK_1, tK_1] ----------------------------------------------

EulerSearchResult construct_cst(const FamilyInstance& instance, int r, int s, int t, int lambda) {
    FamilyInstance base = build(FamilySpec::cst_cycle(r, s, t));
    int st = s * t, rst = r * st;
    std::vector<EdgeId> edges;
    for (int m = 0; m < st; ++m) {
        for (int lidx = 0; lidx < 2 * r; ++lidx) {
            if (lidx % 2 == 0) {
                edges.push_back((lidx / 2) * st + (m % s) * t + (m % t));
            } else if (lidx < 2 * r - 1) {
                edges.push_back(rst + (lidx / 2) * st + (m % t) * s + (m % s));
            } else {
                edges.push_back(rst + (r - 1) * st + (m % t) * s + ((m + 1) % s));
            }
        }
    }
    BaseCertificate cert;
    cert.cycle = make_cycle(*base.graph, edges, 0);
    cert.claimed = HShape::Phi2Tau;
    cert.inducers.emplace_back(LiftKind::Phi2, base.g);
    cert.inducers.emplace_back(LiftKind::Tau, base.extra.at(0).second);
    return finish(instance, *base.graph, std::move(cert), lambda);
}

} // namespace

EulerSearchResult EulerSearchResult::exists(EulerCertificate cert) {
    EulerSearchResult r;
    r.kind = Kind::Exists;
    r.certificate = std::move(cert);
    return r;
}
EulerSearchResult EulerSearchResult::not_exists(EulerObstruction why) {
    EulerSearchResult r;
    r.kind = Kind::NotExists;
    r.obstruction = why;
    return r;
}
EulerSearchResult EulerSearchResult::open(UndeterminedReason why) {
    EulerSearchResult r;
    r.kind = Kind::Undetermined;
    r.undetermined = why;
    return r;
}

const char* to_string(EulerObstruction o) {
    switch (o) {
        case EulerObstruction::LambdaOdd: return "lambda must be even";
        case EulerObstruction::RMustBeEven: return "r must be even";
        default: return "gcd(n,a+b) or gcd(n,a-b) must be 1";
    }
}

const char* to_string(UndeterminedReason r) {
    switch (r) {
        case UndeterminedReason::EdgeTransitiveGcdOpen:
            return "edge-transitive circulant outside the gcd condition (open case)";
        default: return "base graph exceeds the oracle size cap";
    }
}

std::string element_name(const DihedralElement& e) {
    if (!e.reflected) {
        if (e.shift == 0) return "id";
        if (e.shift == 1 % e.ell) return "phi";
        return "phi^" + std::to_string(e.shift);
    }
    int m = mod(-1 - e.shift, e.ell);
    if (m == 0) return "tau";
    if (m == 1) return "phi*tau";
    return "phi^" + std::to_string(m) + "*tau";
}

EulerSearchResult construct_symmetrical_euler(const FamilyInstance& instance,
                                              const SizeGuards& guards) {
    const FamilySpec& spec = instance.spec;
    switch (spec.tag) {
        case FamilyTag::CycleN: return construct_cycle_n(instance, spec.n, spec.lambda);
        case FamilyTag::CycleNExt2: return construct_cycle_n(instance, spec.n, 2 * spec.lambda);
        case FamilyTag::Kst: return construct_kst(instance, spec.s, spec.t, spec.lambda);
        case FamilyTag::K2Lambda: return construct_k2(instance, spec.n * spec.lambda);
        case FamilyTag::Gamma2r1r:
        case FamilyTag::Gamma2r2r:
        case FamilyTag::GammaNAB:
        case FamilyTag::Circulant: {
            auto frame = circ_frame(spec);
            if (!frame)
                throw std::invalid_argument(
                    "instance is not in the Euler-cycle classification: " + spec.describe());
            FamilySpec base_spec = spec;
            base_spec.lambda = 1;
            FamilyInstance base = build(base_spec);
            if (2 * frame->b % frame->n == 0)
                return construct_half_turn(instance, *base.graph, base.g, *frame, spec.lambda);
            return construct_circ4(instance, *base.graph, base.g, *frame, spec.lambda, guards);
        }
        case FamilyTag::CstCycle:
            return construct_cst(instance, spec.r, spec.s, spec.t, spec.lambda);
        default:
            throw std::invalid_argument("instance is not in the Euler-cycle classification: " +
                                        spec.describe());
    }
}

} // namespace eulersym
