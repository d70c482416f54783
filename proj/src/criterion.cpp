#include "lll/criterion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lll {

void validate_setting(const IntersectionSetting& s)
{
    validate_probability_vector(s.p, s.g.size());
    for (auto [a, b] : s.m.pairs())
        if (!s.g.adjacent(a, b)) throw std::invalid_argument("matched pair is not an edge");
    if (s.delta.size() != s.m.pairs().size()) throw std::invalid_argument("need exactly one delta per matched pair");
    for (auto [e, d] : s.delta) {
        if (!s.m.contains(e.first, e.second))
            throw std::invalid_argument("delta given for an unmatched pair (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        if (d <= 0 || d >= 1) throw std::invalid_argument("delta must lie in (0,1)");
        if (d > s.p[e.first - 1] || d > s.p[e.second - 1])
            throw std::invalid_argument("delta exceeds the smaller of its two event probabilities");
    }
}

ReducedVectors reduced_vectors(const IntersectionSetting& s)
{
    validate_setting(s);
    ReducedVectors r{s.p, s.p, ProbabilityVector(s.p.size(), Rational(0))};
    for (auto [e, d] : s.delta) {
        Rational d2 = d * d;
        for (auto [i, j] : {std::pair{e.first, e.second}, std::pair{e.second, e.first}}) {
            const Rational& pi = s.p[i - 1];
            const Rational& pj = s.p[j - 1];
            r.pminus[i - 1] = pi - d2 / 17;
            r.c[i - 1] = d2 / (8 * pi * pj);
            r.pprime[i - 1] = pi * (1 - r.c[i - 1]);
        }
    }
    return r;
}

bool split_mass_covers(const IntersectionSetting& s, const ReducedVectors& r)
{
    for (auto [a, b] : s.m.pairs())
        for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
            Rational lhs = r.pminus[i - 1] + r.pminus[j - 1] * (r.pminus[i - 1] - r.pprime[i - 1]);
            if (lhs < s.p[i - 1]) return false;
        }
    return true;
}

IntersectionVerdict intersection_lll_verdict(const IntersectionSetting& s, const Rational& eps)
{
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    IntersectionVerdict out;
    out.reduced = reduced_vectors(s);
    for (const auto& x : out.reduced.pminus) out.scaled.push_back((1 + eps) * x);
    for (std::size_t i = 0; i < out.scaled.size(); ++i)
        if (out.scaled[i] > 1) {
            out.clamped = true;
            out.verdict.evidence = "clamp: (1+eps) p-_" + std::to_string(i + 1) + " = " + to_string(out.scaled[i]) + " > 1";
            return out;
        }
    auto rep = in_shearer_bound(s.g, out.scaled);
    if (rep.in_bound) {
        out.verdict.accepted = true;
        out.verdict.bound_on_ET = Rational(s.g.size()) / eps;
        out.verdict.evidence = "(1+eps) p- in Shearer's bound";
    } else {
        out.witness = rep.witness;
        std::string w;
        for (int v : *rep.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
        out.verdict.evidence = "q_I <= 0 at (1+eps) p- for I = {" + w + "}";
    }
    return out;
}

Digamma digamma(const BipartiteGraph& b, const ProbabilityVector& p, const std::vector<int>& left_in)
{
    if (static_cast<int>(p.size()) != b.events()) throw std::invalid_argument("probability vector length mismatch");
    std::vector<int> left = left_in;
    if (left.empty())
        for (int i = 1; i <= b.events(); ++i) left.push_back(i);
    BipartiteGraph k = restrict_events(b, left);
    Digamma out;
    out.events = k.events();
    out.variables = k.variables();
    out.delta_b = k.max_event_degree();
    out.delta_d = base_graph(k).max_degree();
    if (out.delta_d == 0) throw std::invalid_argument("digamma needs at least one pair of dependent events");
    RealInterval total(-static_cast<long>(out.variables));
    Rational pmin = p.at(left[0] - 1);
    for (std::size_t a = 0; a < left.size(); ++a) {
        int deg = static_cast<int>(k.vbl(static_cast<int>(a) + 1).size());
        if (deg == 0) throw std::invalid_argument("event " + std::to_string(left[a]) + " depends on no variable");
        const Rational& pi = p.at(left[a] - 1);
        if (pi <= 0 || pi > 1) throw std::invalid_argument("probability outside (0,1]");
        pmin = std::min(pmin, pi);
        total = total + RealInterval(static_cast<long>(deg)) * RealInterval(pi).root(static_cast<unsigned long>(deg));
    }
    RealInterval denom = RealInterval(static_cast<long>(out.events)).sqrt() * RealInterval(static_cast<long>(out.delta_d)) *
                         RealInterval(static_cast<long>(out.delta_b)).square();
    out.value = RealInterval(pmin).square() * total / denom;
    out.plus = out.value.clamp_nonnegative();
    return out;
}

std::vector<Rational> matching_intersection_lower_bound(const BipartiteGraph& b, const ProbabilityVector& p,
                                                        const std::vector<std::vector<int>>& left_sets)
{
    std::set<int> used;
    for (const auto& l : left_sets)
        for (int i : l)
            if (!used.insert(i).second) throw std::invalid_argument("event subsets must be disjoint");
    std::vector<Rational> out;
    for (const auto& l : left_sets) {
        if (!is_linear(simplify(restrict_events(b, l)))) throw std::invalid_argument("event subset is not linear after simplification");
        out.push_back(digamma(b, p, l).plus.square().lower());
    }
    return out;
}

CycleR r_cycle(const DependencyGraph& g, const ProbabilityVector& p, const std::vector<int>& cycle)
{
    if (cycle.size() < 4 || !is_induced_cycle(g, cycle)) throw std::invalid_argument("not a chordless cycle of length >= 4");
    validate_probability_vector(p, g.size());
    const long len = static_cast<long>(cycle.size());
    Rational pmin = p[cycle[0] - 1];
    RealInterval roots(0L);
    for (int v : cycle) {
        pmin = std::min(pmin, p[v - 1]);
        roots = roots + RealInterval(p[v - 1]).sqrt();
    }
    RealInterval bracket = RealInterval(2L) * roots / RealInterval(len) - RealInterval(1L);
    RealInterval front = RealInterval(len) * RealInterval(pmin).pow(4);
    return {front * bracket.square(), front * bracket.clamp_nonnegative().square()};
}

BeyondVerdict beyond_shearer_verdict(const DependencyGraph& g, const ProbabilityVector& p, const Rational& eps,
                                     const ChordlessCycleSet& cycles, const GapEstimate& gap)
{
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    std::set<int> seen;
    for (const auto& c : cycles.cycles)
        for (int v : c)
            if (!seen.insert(v).second) throw std::invalid_argument("cycles are not vertex-disjoint");
    BeyondVerdict out;
    out.gap = gap;
    out.r_plus_sum = RealInterval(0L);
    for (const auto& c : cycles.cycles) out.r_plus_sum = out.r_plus_sum + r_cycle(g, p, c).rplus;
    out.threshold_545 = (out.r_plus_sum / RealInterval(545L)).lower();
    out.threshold_544 = (out.r_plus_sum / RealInterval(544L)).lower();
    // A gap of -1 means (1+eps) p is already in bound.
    out.verdict.accepted = gap.upper < out.threshold_545;
    out.accepted_544 = gap.upper < out.threshold_544;
    if (out.verdict.accepted) out.verdict.bound_on_ET = Rational(g.size()) / eps;
    out.verdict.evidence = gap.in_bound ? "(1+eps) p in Shearer's bound"
                                        : std::string("gap upper ") + (out.verdict.accepted ? "<" : ">=") +
                                              " sum r+ / 545";
    return out;
}

bool beyond_bound(const DependencyGraph& g, const ProbabilityVector& p)
{
    for (const auto& x : p)
        if (x >= 1) return true;
    return !shearer_member(g, p);
}

ProbabilityVector transfer_along_path(const DependencyGraph& g, const ProbabilityVector& p, const std::vector<int>& path,
                                      const Rational& q)
{
    if (static_cast<int>(p.size()) != g.size()) throw std::invalid_argument("probability vector length mismatch");
    if (path.size() < 2) throw std::invalid_argument("path needs two distinct endpoints");
    for (int v : path)
        if (v < 1 || v > g.size()) throw std::invalid_argument("path vertex out of range");
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (!g.adjacent(path[k], path[k + 1])) throw std::invalid_argument("path uses a non-edge");
    const int i = path.front(), ip = path.back();
    if (bfs_distances(g, i)[ip] != static_cast<int>(path.size()) - 1) throw std::invalid_argument("path is not a shortest path");
    if (q < 0 || q > p[ip - 1]) throw std::invalid_argument("q must lie in [0, p_i']");
    Rational factor = (1 - p[i - 1]) / p[ip - 1];
    for (std::size_t k = 1; k + 1 < path.size(); ++k) factor *= (1 - p[path[k] - 1]) / p[path[k] - 1];
    ProbabilityVector out = p;
    out[ip - 1] -= q;
    out[i - 1] += factor * q;
    return out;
}

TransferConditions probability_transfer_conditions(const DependencyGraph& g, const ProbabilityVector& p,
                                                   const Rational& pa, const std::vector<std::vector<int>>& sets,
                                                   const std::vector<std::vector<int>>& targets, int K, int d)
{
    const int m = g.size();
    if (static_cast<int>(p.size()) != m) throw std::invalid_argument("probability vector length mismatch");
    if (sets.size() != targets.size()) throw std::invalid_argument("every set needs a target");
    if (K < 1 || d < 1) throw std::invalid_argument("K and d must be positive");
    if (pa <= 0 || pa >= 1) throw std::invalid_argument("p_a must lie in (0,1)");
    std::vector<char> covered(m + 1, 0);
    for (const auto& s : sets)
        for (int v : s) {
            if (v < 1 || v > m) throw std::invalid_argument("set vertex out of range");
            covered[v] = 1;
        }
    for (int v = 1; v <= m; ++v)
        if (!covered[v]) throw std::invalid_argument("sets do not cover every vertex");

    TransferConditions out;
    std::vector<int> mult(m + 1, 0);
    for (const auto& t : targets)
        for (int v : t) {
            if (v < 1 || v > m) throw std::invalid_argument("target vertex out of range");
            ++mult[v];
        }
    out.a = *std::max_element(mult.begin(), mult.end()) <= K;

    out.b = true;
    for (std::size_t k = 0; k < sets.size() && out.b; ++k)
        for (int i : sets[k]) {
            auto dist = bfs_distances(g, i);
            for (int t : targets[k])
                if (dist[t] < 0 || dist[t] > d) out.b = false;
        }

    Rational factor = Rational(K) / pa;
    for (int k = 1; k < d; ++k) factor *= (1 - pa) / pa;
    out.c = true;
    for (std::size_t k = 0; k < sets.size(); ++k) {
        Rational excess = 0, room = 0;
        for (int i : sets[k]) excess += std::max(Rational(p[i - 1] - pa), Rational(0));
        for (int t : targets[k]) room += std::max(Rational(pa - p[t - 1]), Rational(0));
        if (factor * excess > room) out.c = false;
    }
    return out;
}

int lattice_max_degree(const LatticeUnit& unit)
{
    if (unit.lattice_degree > 0) return unit.lattice_degree;
    std::vector<int> reps(unit.shifts.size(), 3);
    auto big = expand_translational_unit(unit.graph, unit.position, unit.shifts, reps, unit.class_modulus);
    return big.graph.max_degree();
}

LatticeGap lattice_gap_q(const LatticeUnit& unit, const Rational& pa)
{
    if (pa <= 0 || pa >= 1) throw std::invalid_argument("p_a must lie in (0,1)");
    if (!is_connected(unit.graph)) throw std::invalid_argument("translational unit is disconnected");
    LatticeGap out;
    out.diameter = diameter(unit.graph);
    out.max_degree = lattice_max_degree(unit);
    out.unit_vertices = unit.graph.size();
    ProbabilityVector p(unit.graph.size(), pa);
    out.digamma = digamma(edge_variable_graph(unit.graph), p);
    RealInterval a(pa), one_minus(Rational(1 - pa));
    RealInterval num = a.pow(static_cast<unsigned long>(out.diameter + 2)) * out.digamma.plus.square();
    RealInterval den = RealInterval(17L * (out.max_degree + 1)) *
                       RealInterval(static_cast<long>(out.unit_vertices)).square() *
                       one_minus.pow(static_cast<unsigned long>(out.diameter + 1));
    out.q = num / den;
    return out;
}

SwapProbability swap_probability(const std::vector<Rational>& px, const std::vector<Rational>& py,
                                 const std::vector<Rational>& pz, const std::vector<std::vector<char>>& a,
                                 const std::vector<std::vector<char>>& a2)
{
    const std::size_t nx = px.size(), ny = py.size(), nz = pz.size();
    if (a.size() != nx || a2.size() != ny) throw std::invalid_argument("event tables have the wrong shape");
    for (const auto& row : a)
        if (row.size() != ny) throw std::invalid_argument("event tables have the wrong shape");
    for (const auto& row : a2)
        if (row.size() != nz) throw std::invalid_argument("event tables have the wrong shape");
    SwapProbability out;
    Rational pa = 0, pa2 = 0, both = 0;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            if (a[x][y]) pa += px[x] * py[y];
    for (std::size_t y = 0; y < ny; ++y)
        for (std::size_t z = 0; z < nz; ++z)
            if (a2[y][z]) pa2 += py[y] * pz[z];
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            for (std::size_t z = 0; z < nz; ++z)
                if (a[x][y] && a2[y][z]) both += px[x] * py[y] * pz[z];
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y1 = 0; y1 < ny; ++y1)
            for (std::size_t y2 = 0; y2 < ny; ++y2)
                for (std::size_t z = 0; z < nz; ++z)
                    if (a[x][y1] && a2[y2][z] && (!a[x][y2] || !a2[y1][z]))
                        out.compound += px[x] * py[y1] * py[y2] * pz[z];
    out.bound = pa * pa2 - both * both;
    return out;
}

}  // namespace lll
