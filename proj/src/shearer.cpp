#include "lll/shearer.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace lll {

void validate_probability_vector(const ProbabilityVector& p, int m)
{
    if (static_cast<int>(p.size()) != m)
        throw std::invalid_argument("probability vector has length " + std::to_string(p.size()) + ", expected " +
                                    std::to_string(m));
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] <= 0 || p[i] > 1)
            throw std::invalid_argument("probability p_" + std::to_string(i + 1) + " = " + to_string(p[i]) +
                                        " outside (0,1]");
}

namespace {

using Mask = std::uint64_t;

void check_size(const DependencyGraph& g, int max_vertices)
{
    if (g.size() > max_vertices || g.size() > 63)
        throw std::length_error("graph has " + std::to_string(g.size()) +
                                    " vertices, above the enumeration cap of " + std::to_string(max_vertices));
}

// q_empty of induced subgraphs, memoised by vertex mask:
// q(S) = q(S - v) - p_v q(S - N[v]) for the lowest v in S.
class Evaluator {
public:
    Evaluator(const DependencyGraph& g, const ProbabilityVector& p) : p_(p)
    {
        closed_.resize(static_cast<std::size_t>(g.size()));
        for (int v = 1; v <= g.size(); ++v) {
            Mask m = Mask(1) << (v - 1);
            for (int w : g.neighbors(v)) m |= Mask(1) << (w - 1);
            closed_[v - 1] = m;
        }
        full_ = g.size() == 0 ? 0 : (g.size() == 64 ? ~Mask(0) : (Mask(1) << g.size()) - 1);
    }

    const Rational& q_empty(Mask s)
    {
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        Rational r;
        if (s == 0) {
            r = 1;
        } else {
            int v = __builtin_ctzll(s);
            Rational without = q_empty(s & ~(Mask(1) << v));
            if (p_[v] == 0)
                r = without;
            else
                r = without - p_[v] * q_empty(s & ~closed_[v]);
        }
        return memo_.emplace(s, r).first->second;
    }

    Rational q_of(const std::vector<int>& I)
    {
        Mask rest = full_;
        Rational prod(1);
        for (int v : I) {
            rest &= ~closed_[v - 1];
            prod *= p_[v - 1];
        }
        return prod * q_empty(rest);
    }

private:
    const ProbabilityVector& p_;
    std::vector<Mask> closed_;
    Mask full_ = 0;
    std::unordered_map<Mask, Rational> memo_;
};

void for_each_independent(const DependencyGraph& g, const std::vector<char>& allowed,
                          const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> current;
    std::function<void(int)> rec = [&](int from) {
        visit(current);
        for (int v = from; v <= g.size(); ++v) {
            if (!allowed[v]) continue;
            bool ok = true;
            for (int u : current)
                if (g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(1);
}

std::vector<std::vector<int>> sorted_independent_sets(const DependencyGraph& g, const std::vector<char>& allowed)
{
    std::vector<std::vector<int>> out;
    for_each_independent(g, allowed, [&](const std::vector<int>& s) { out.push_back(s); });
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

std::vector<std::vector<int>> independent_sets(const DependencyGraph& g, int max_vertices)
{
    check_size(g, max_vertices);
    return sorted_independent_sets(g, std::vector<char>(static_cast<std::size_t>(g.size()) + 1, 1));
}

Rational q_polynomial(const DependencyGraph& g, const ProbabilityVector& p, const std::vector<int>& I)
{
    check_size(g, kMaxShearerVertices);
    if (static_cast<int>(p.size()) != g.size()) throw std::invalid_argument("probability vector length mismatch");
    for (std::size_t a = 0; a < I.size(); ++a) {
        if (I[a] < 1 || I[a] > g.size()) throw std::invalid_argument("vertex outside graph");
        for (std::size_t b = a + 1; b < I.size(); ++b)
            if (I[a] == I[b] || g.adjacent(I[a], I[b])) throw std::invalid_argument("set is not independent");
    }
    Evaluator ev(g, p);
    return ev.q_of(I);
}

ShearerReport in_shearer_bound(const DependencyGraph& g, const ProbabilityVector& p, bool record_all)
{
    check_size(g, kMaxShearerVertices);
    if (static_cast<int>(p.size()) != g.size()) throw std::invalid_argument("probability vector length mismatch");
    for (const auto& x : p)
        if (x < 0 || x > 1) throw std::invalid_argument("probability outside [0,1]");
    Evaluator ev(g, p);
    ShearerReport rep;
    rep.q_empty = ev.q_of({});
    for (int v = 1; v <= g.size(); ++v) rep.q_singletons.push_back(ev.q_of({v}));
    std::vector<char> allowed(static_cast<std::size_t>(g.size()) + 1, 1);
    for (int v = 1; v <= g.size(); ++v) allowed[v] = p[v - 1] > 0;
    rep.in_bound = true;
    for (const auto& I : sorted_independent_sets(g, allowed)) {
        Rational q = ev.q_of(I);
        if (record_all) rep.q_values.push_back({I, q});
        if (q <= 0 && rep.in_bound) {
            rep.in_bound = false;
            rep.witness = I;
            if (!record_all) break;
        }
    }
    return rep;
}

bool shearer_member(const DependencyGraph& g, const ProbabilityVector& p)
{
    return in_shearer_bound(g, p, false).in_bound;
}

namespace {

ProbabilityVector scaled(const ProbabilityVector& d, const Rational& t)
{
    ProbabilityVector r(d);
    for (auto& x : r) x *= t;
    return r;
}

}  // namespace

ScaleInterval boundary_scale(const DependencyGraph& g, const ProbabilityVector& direction, const Rational& resolution)
{
    if (static_cast<int>(direction.size()) != g.size()) throw std::invalid_argument("direction length mismatch");
    for (const auto& x : direction)
        if (x <= 0) throw std::invalid_argument("direction entries must be positive");
    if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
    Rational top = 1 / max_entry(direction);
    ScaleInterval out;
    if (shearer_member(g, scaled(direction, top))) {
        out.lo = out.hi = top;
        out.clamped = true;
        return out;
    }
    Rational lo(0), hi(top);
    while (hi - lo > resolution) {
        Rational mid = (lo + hi) / 2;
        if (shearer_member(g, scaled(direction, mid)))
            lo = mid;
        else
            hi = mid;
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

namespace {

struct Box {
    ProbabilityVector a, b;
    Rational sum_a;
};

struct BoxOrder {
    bool operator()(const Box& x, const Box& y) const { return x.sum_a > y.sum_a; }
};

// Shrinks each coordinate of an out-of-bound x as far as possible while staying out of bound.
void coordinate_descent(const DependencyGraph& g, ProbabilityVector& x, const Rational& step,
                        const std::vector<int>& order)
{
    for (int round = 0; round < 4; ++round) {
        bool moved = false;
        for (int i : order) {
            Rational lo(0), hi = x[i];
            ProbabilityVector y(x);
            y[i] = 0;
            if (!shearer_member(g, y)) {
                x[i] = 0;
                moved = moved || hi > 0;
                continue;
            }
            while (hi - lo > step) {
                Rational mid = (lo + hi) / 2;
                y[i] = mid;
                if (shearer_member(g, y))
                    lo = mid;
                else
                    hi = mid;
            }
            if (hi < x[i]) moved = true;
            x[i] = hi;
        }
        if (!moved) break;
    }
}

}  // namespace

GapEstimate l1_gap(const DependencyGraph& g, const ProbabilityVector& p, const Rational& resolution,
                   std::size_t max_boxes)
{
    if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
    if (static_cast<int>(p.size()) != g.size()) throw std::invalid_argument("probability vector length mismatch");
    GapEstimate out;
    out.resolution = resolution;
    if (shearer_member(g, p)) {
        out.in_bound = true;
        out.lower = out.upper = -1;
        return out;
    }
    const int m = g.size();
    const Rational total = sum(p);

    // x = p - q ranges over [0, p]; we need min |x|_1 over out-of-bound x.
    ProbabilityVector best_x(p);
    Rational best = total;
    Rational step = resolution / (4 * std::max(1, m));
    for (int shift = 0; shift < m; ++shift) {
        std::vector<int> order;
        for (int k = 0; k < m; ++k) order.push_back((k + shift) % m);
        ProbabilityVector x(p);
        coordinate_descent(g, x, step, order);
        Rational s = sum(x);
        if (s < best) {
            best = s;
            best_x = x;
        }
    }

    std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;
    queue.push(Box{ProbabilityVector(static_cast<std::size_t>(m), Rational(0)), p, Rational(0)});
    Rational floor_sum = best;
    std::size_t boxes = 0;
    bool exhausted = true;
    while (!queue.empty()) {
        const Rational& low = queue.top().sum_a;
        if (best - low <= resolution) {
            floor_sum = low;
            exhausted = false;
            break;
        }
        if (boxes >= max_boxes) {
            floor_sum = low;
            exhausted = false;
            out.converged = false;
            break;
        }
        Box box = queue.top();
        queue.pop();
        ++boxes;
        if (shearer_member(g, box.b)) continue;
        Rational sb = sum(box.b);
        if (sb < best) {
            best = sb;
            best_x = box.b;
        }
        if (!shearer_member(g, box.a)) {
            if (box.sum_a < best) {
                best = box.sum_a;
                best_x = box.a;
            }
            continue;
        }
        int widest = 0;
        for (int i = 1; i < m; ++i)
            if (box.b[i] - box.a[i] > box.b[widest] - box.a[widest]) widest = i;
        Rational mid = (box.a[widest] + box.b[widest]) / 2;
        Box lower_half{box.a, box.b, box.sum_a};
        lower_half.b[widest] = mid;
        Box upper_half{box.a, box.b, box.sum_a + (mid - box.a[widest])};
        upper_half.a[widest] = mid;
        queue.push(std::move(lower_half));
        queue.push(std::move(upper_half));
    }
    if (exhausted) floor_sum = best;
    out.boxes = boxes;
    out.lower = total - best;
    out.upper = total - floor_sum;
    out.witness = best_x;
    return out;
}

Rational expected_resample_bound(const DependencyGraph& g, const ProbabilityVector& p)
{
    auto rep = in_shearer_bound(g, p);
    if (!rep.in_bound) throw std::invalid_argument("probability vector is outside Shearer's bound");
    Rational s(0);
    for (const auto& q : rep.q_singletons) s += q;
    return s / rep.q_empty;
}

}  // namespace lll
