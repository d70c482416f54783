#include "lll/events.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lll {

u128 uniform_threshold(const Rational& a)
{
    if (a <= 0) return 0;
    if (a >= 1) return u128(1) << 64;
    mpz_class scaled = a.get_num() << 64;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), a.get_den().get_mpz_t());
    u128 r = 0;
    for (int word = 1; word >= 0; --word) {
        mpz_class part = (q >> (64 * word)) & mpz_class("18446744073709551615");
        r = (r << 64) | static_cast<u128>(mpz_get_ui(part.get_mpz_t()));
    }
    return r;
}

Distribution Distribution::uniform01() { return Distribution{}; }

Distribution Distribution::finite(std::vector<Rational> masses)
{
    if (masses.empty()) throw std::invalid_argument("finite distribution needs at least one value");
    Rational total(0);
    Distribution d;
    d.kind = Kind::Finite;
    for (const auto& m : masses) {
        if (m < 0) throw std::invalid_argument("negative probability mass");
        total += m;
        d.thresholds.push_back(uniform_threshold(total));
    }
    if (total != 1) throw std::invalid_argument("masses sum to " + to_string(total) + ", not 1");
    d.masses = std::move(masses);
    return d;
}

AllowedSet AllowedSet::interval(const Rational& a, const Rational& b) { return union_of({{a, b}}); }

AllowedSet AllowedSet::union_of(std::vector<std::pair<Rational, Rational>> parts)
{
    std::vector<std::pair<Rational, Rational>> clipped;
    for (auto [a, b] : parts) {
        if (a < 0) a = 0;
        if (b > 1) b = 1;
        if (a < b) clipped.push_back({a, b});
    }
    std::sort(clipped.begin(), clipped.end());
    AllowedSet s;
    for (const auto& iv : clipped) {
        if (!s.intervals.empty() && iv.first <= s.intervals.back().second) {
            if (iv.second > s.intervals.back().second) s.intervals.back().second = iv.second;
        } else {
            s.intervals.push_back(iv);
        }
    }
    return s;
}

AllowedSet AllowedSet::of_values(std::vector<int> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    AllowedSet s;
    s.values = std::move(values);
    return s;
}

Rational measure(const Distribution& d, const AllowedSet& s)
{
    Rational m(0);
    if (d.kind == Distribution::Kind::Uniform01) {
        for (const auto& [a, b] : s.intervals) m += b - a;
    } else {
        for (int v : s.values) m += d.masses.at(static_cast<std::size_t>(v));
    }
    return m;
}

AllowedSet intersect(const Distribution& d, const AllowedSet& x, const AllowedSet& y)
{
    if (d.kind == Distribution::Kind::Finite) {
        std::vector<int> common;
        std::set_intersection(x.values.begin(), x.values.end(), y.values.begin(), y.values.end(),
                              std::back_inserter(common));
        return AllowedSet::of_values(common);
    }
    std::vector<std::pair<Rational, Rational>> parts;
    for (const auto& [a, b] : x.intervals)
        for (const auto& [c, e] : y.intervals) {
            Rational lo = a > c ? a : c, hi = b < e ? b : e;
            if (lo < hi) parts.push_back({lo, hi});
        }
    return AllowedSet::union_of(parts);
}

Value sample_value(const Distribution& d, std::uint64_t bits)
{
    if (d.kind == Distribution::Kind::Uniform01) return bits;
    for (std::size_t k = 0; k < d.thresholds.size(); ++k)
        if (static_cast<u128>(bits) < d.thresholds[k]) return k;
    return d.thresholds.size() - 1;
}

void EventSystem::check_variable(int j) const
{
    if (j < 1 || j > variable_count()) throw std::out_of_range("variable " + std::to_string(j) + " out of range");
}

int EventSystem::add_variable(Distribution d)
{
    vars_.push_back(std::move(d));
    return variable_count();
}

const Distribution& EventSystem::variable(int j) const
{
    check_variable(j);
    return vars_[j - 1];
}

const Event& EventSystem::event(int i) const
{
    if (i < 1 || i > event_count()) throw std::out_of_range("event " + std::to_string(i) + " out of range");
    return events_[i - 1];
}

int EventSystem::add_box_event(const std::vector<std::pair<int, AllowedSet>>& constraints)
{
    if (constraints.empty()) throw std::invalid_argument("an event must depend on at least one variable");
    std::vector<std::pair<int, AllowedSet>> sorted(constraints);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Event e;
    std::vector<AllowedSet> box;
    // Compiled membership: dyadic ranges for uniform variables, flags for finite ones.
    std::vector<std::vector<std::pair<u128, u128>>> ranges;
    std::vector<std::vector<char>> flags;
    for (const auto& [j, set] : sorted) {
        check_variable(j);
        if (!e.vbl.empty() && e.vbl.back() == j) throw std::invalid_argument("variable repeated in event");
        const auto& d = vars_[j - 1];
        e.vbl.push_back(j);
        std::vector<std::pair<u128, u128>> r;
        std::vector<char> f;
        if (d.kind == Distribution::Kind::Uniform01) {
            if (!set.values.empty()) throw std::invalid_argument("value set given for a uniform variable");
            AllowedSet norm = AllowedSet::union_of(set.intervals);
            for (const auto& [a, b] : norm.intervals) r.push_back({uniform_threshold(a), uniform_threshold(b)});
            box.push_back(norm);
        } else {
            if (!set.intervals.empty()) throw std::invalid_argument("intervals given for a finite variable");
            AllowedSet norm = AllowedSet::of_values(set.values);
            f.assign(d.domain_size(), 0);
            for (int v : norm.values) {
                if (v < 0 || static_cast<std::size_t>(v) >= d.domain_size())
                    throw std::invalid_argument("value outside finite domain");
                f[static_cast<std::size_t>(v)] = 1;
            }
            box.push_back(norm);
        }
        ranges.push_back(std::move(r));
        flags.push_back(std::move(f));
    }
    std::vector<char> finite;
    for (int j : e.vbl) finite.push_back(vars_[j - 1].kind == Distribution::Kind::Finite);
    e.box = box;
    e.predicate = [ranges, flags, finite](const std::vector<Value>& values) {
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (finite[k]) {
                if (values[k] >= flags[k].size() || !flags[k][values[k]]) return false;
            } else {
                bool in = false;
                for (const auto& [lo, hi] : ranges[k])
                    if (static_cast<u128>(values[k]) >= lo && static_cast<u128>(values[k]) < hi) {
                        in = true;
                        break;
                    }
                if (!in) return false;
            }
        }
        return true;
    };
    events_.push_back(std::move(e));
    return event_count();
}

int EventSystem::add_table_event(std::vector<int> vbl, std::vector<std::vector<int>> tuples)
{
    if (vbl.empty()) throw std::invalid_argument("an event must depend on at least one variable");
    if (!std::is_sorted(vbl.begin(), vbl.end()) || std::adjacent_find(vbl.begin(), vbl.end()) != vbl.end())
        throw std::invalid_argument("event variables must be sorted and distinct");
    for (int j : vbl) {
        check_variable(j);
        if (vars_[j - 1].kind != Distribution::Kind::Finite)
            throw std::invalid_argument("table events need finite variables");
    }
    std::set<std::vector<Value>> accepted;
    for (const auto& t : tuples) {
        if (t.size() != vbl.size()) throw std::invalid_argument("tuple arity does not match event variables");
        std::vector<Value> row;
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t[k] < 0 || static_cast<std::size_t>(t[k]) >= vars_[vbl[k] - 1].domain_size())
                throw std::invalid_argument("tuple value outside finite domain");
            row.push_back(static_cast<Value>(t[k]));
        }
        accepted.insert(row);
    }
    Event e;
    e.vbl = std::move(vbl);
    e.table = std::move(tuples);
    e.predicate = [accepted](const std::vector<Value>& values) { return accepted.count(values) > 0; };
    events_.push_back(std::move(e));
    return event_count();
}

int EventSystem::add_predicate_event(std::vector<int> vbl, std::function<bool(const std::vector<Value>&)> predicate)
{
    if (vbl.empty()) throw std::invalid_argument("an event must depend on at least one variable");
    if (!std::is_sorted(vbl.begin(), vbl.end()) || std::adjacent_find(vbl.begin(), vbl.end()) != vbl.end())
        throw std::invalid_argument("event variables must be sorted and distinct");
    for (int j : vbl) check_variable(j);
    Event e;
    e.vbl = std::move(vbl);
    e.predicate = std::move(predicate);
    events_.push_back(std::move(e));
    return event_count();
}

bool EventSystem::elementary() const
{
    for (const auto& e : events_)
        if (!e.box) return false;
    return true;
}

bool EventSystem::holds(int i, const std::vector<Value>& values) const { return event(i).predicate(values); }

BipartiteGraph EventSystem::bipartite() const
{
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= event_count(); ++i)
        for (int j : events_[i - 1].vbl) es.push_back({i, j});
    return BipartiteGraph(event_count(), variable_count(), es);
}

DependencyGraph EventSystem::base_graph() const { return lll::base_graph(bipartite()); }

namespace {

// Sum of Pr over all joint values of `vars` (all finite) where `accept` holds.
Rational exhaustive(const std::vector<Distribution>& dists, const std::vector<int>& vars,
                    const std::function<bool(const std::vector<Value>&)>& accept, std::uint64_t cap)
{
    std::uint64_t count = 1;
    for (int j : vars) {
        const auto& d = dists[j - 1];
        if (d.kind != Distribution::Kind::Finite)
            throw std::invalid_argument("exact probability of a non-elementary event needs finite variables");
        count *= d.domain_size();
        if (count > cap) throw std::length_error("joint domain exceeds the product cap");
    }
    std::vector<Value> values(vars.size(), 0);
    Rational total(0);
    for (std::uint64_t c = 0; c < count; ++c) {
        std::uint64_t rest = c;
        Rational w(1);
        for (std::size_t k = 0; k < vars.size(); ++k) {
            const auto& d = dists[vars[k] - 1];
            values[k] = rest % d.domain_size();
            rest /= d.domain_size();
            w *= d.masses[values[k]];
        }
        if (w != 0 && accept(values)) total += w;
    }
    return total;
}

std::vector<Value> project(const std::vector<int>& from, const std::vector<Value>& values, const std::vector<int>& to)
{
    std::vector<Value> out;
    for (int j : to) {
        auto it = std::lower_bound(from.begin(), from.end(), j);
        out.push_back(values[static_cast<std::size_t>(it - from.begin())]);
    }
    return out;
}

}  // namespace

Rational EventSystem::probability(int i, std::uint64_t cap) const
{
    const Event& e = event(i);
    if (e.box) {
        Rational p(1);
        for (std::size_t k = 0; k < e.vbl.size(); ++k) p *= measure(vars_[e.vbl[k] - 1], (*e.box)[k]);
        return p;
    }
    return exhaustive(vars_, e.vbl, e.predicate, cap);
}

Rational EventSystem::intersection_probability(int i, int k, std::uint64_t cap) const
{
    const Event& a = event(i);
    const Event& b = event(k);
    std::vector<int> all;
    std::set_union(a.vbl.begin(), a.vbl.end(), b.vbl.begin(), b.vbl.end(), std::back_inserter(all));
    if (a.box && b.box) {
        Rational p(1);
        for (int j : all) {
            auto ia = std::find(a.vbl.begin(), a.vbl.end(), j);
            auto ib = std::find(b.vbl.begin(), b.vbl.end(), j);
            const auto& d = vars_[j - 1];
            if (ia != a.vbl.end() && ib != b.vbl.end())
                p *= measure(d, intersect(d, (*a.box)[ia - a.vbl.begin()], (*b.box)[ib - b.vbl.begin()]));
            else if (ia != a.vbl.end())
                p *= measure(d, (*a.box)[ia - a.vbl.begin()]);
            else
                p *= measure(d, (*b.box)[ib - b.vbl.begin()]);
        }
        return p;
    }
    // A box event may sit on uniform variables the other event does not touch: integrate those out
    // and enumerate the finite ones.
    const Event& box = a.box ? a : b;
    const Event& other = a.box ? b : a;
    Rational uniform_part(1);
    std::vector<int> finite;
    for (int j : all) {
        if (vars_[j - 1].kind == Distribution::Kind::Finite) {
            finite.push_back(j);
            continue;
        }
        auto it = std::find(box.vbl.begin(), box.vbl.end(), j);
        if (!box.box || it == box.vbl.end() || std::binary_search(other.vbl.begin(), other.vbl.end(), j))
            throw std::invalid_argument("exact probability of a non-elementary event needs finite variables");
        uniform_part *= measure(vars_[j - 1], (*box.box)[it - box.vbl.begin()]);
    }
    if (uniform_part == 0) return uniform_part;
    auto box_finite_holds = [&](const std::vector<Value>& v) {
        if (!box.box) return box.predicate(project(finite, v, box.vbl));
        for (std::size_t k = 0; k < box.vbl.size(); ++k) {
            if (vars_[box.vbl[k] - 1].kind != Distribution::Kind::Finite) continue;
            const auto& vals = (*box.box)[k].values;
            Value x = project(finite, v, {box.vbl[k]})[0];
            if (std::find(vals.begin(), vals.end(), static_cast<int>(x)) == vals.end()) return false;
        }
        return true;
    };
    return uniform_part * exhaustive(vars_, finite,
                                     [&](const std::vector<Value>& v) {
                                         return box_finite_holds(v) && other.predicate(project(finite, v, other.vbl));
                                     },
                                     cap);
}

Value EventSystem::sample(int j, std::uint64_t random_bits) const
{
    check_variable(j);
    return sample_value(vars_[j - 1], random_bits);
}

std::uint64_t mix64(std::uint64_t x)
{
    // splitmix64 finaliser
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return mix64(mix64(master) ^ mix64(~index)); }

ResamplingTable::ResamplingTable(const EventSystem& sys, std::uint64_t seed) : seed_(seed)
{
    for (int j = 1; j <= sys.variable_count(); ++j) dists_.push_back(sys.variable(j));
}

ResamplingTable ResamplingTable::from_rows(std::vector<std::vector<Value>> rows)
{
    ResamplingTable t;
    t.rows_ = std::move(rows);
    return t;
}

bool ResamplingTable::has(int j, std::size_t k) const
{
    if (k < 1 || j < 1) return false;
    if (rows_) return static_cast<std::size_t>(j) <= rows_->size() && k <= (*rows_)[j - 1].size();
    return static_cast<std::size_t>(j) <= dists_.size();
}

Value ResamplingTable::at(int j, std::size_t k) const
{
    if (!has(j, k))
        throw std::out_of_range("resampling table has no entry (" + std::to_string(j) + "," + std::to_string(k) + ")");
    if (rows_) return (*rows_)[j - 1][k - 1];
    std::uint64_t bits = mix64(derive_seed(seed_, static_cast<std::uint64_t>(j)) ^ mix64(k));
    return sample_value(dists_[j - 1], bits);
}

}  // namespace lll
