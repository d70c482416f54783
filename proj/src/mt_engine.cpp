#include "lll/mt_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace lll {

SelectionRule SelectionRule::lowest_index()
{
    return {"lowest", [](const std::vector<int>& violated, const std::vector<int>&, std::mt19937_64&) {
                return violated.front();
            }};
}

SelectionRule SelectionRule::uniform_random()
{
    return {"random", [](const std::vector<int>& violated, const std::vector<int>&, std::mt19937_64& rng) {
                std::uniform_int_distribution<std::size_t> pick(0, violated.size() - 1);
                return violated[pick(rng)];
            }};
}

SelectionRule SelectionRule::recent_neighbor(const DependencyGraph& g)
{
    return {"neighbor", [g](const std::vector<int>& violated, const std::vector<int>& history, std::mt19937_64&) {
                if (history.empty()) return violated.front();
                int last = history.back();
                int best = 0;
                auto consider = [&](int i) {
                    if (std::binary_search(violated.begin(), violated.end(), i) && (best == 0 || i < best)) best = i;
                };
                consider(last);
                for (int i : g.neighbors(last)) consider(i);
                return best ? best : violated.front();
            }};
}

std::vector<std::string> SelectionRule::names() { return {"lowest", "random", "neighbor"}; }

SelectionRule SelectionRule::by_name(const std::string& name, const DependencyGraph& g)
{
    if (name == "lowest") return lowest_index();
    if (name == "random") return uniform_random();
    if (name == "neighbor") return recent_neighbor(g);
    throw std::invalid_argument("unknown selection rule '" + name + "' (lowest, random, neighbor)");
}

RunStats run_mt_with_table(const EventSystem& sys, const SelectionRule& rule, const ResamplingTable& table,
                           std::uint64_t rule_seed, std::size_t step_cap)
{
    if (step_cap == 0) throw std::invalid_argument("step cap must be positive");
    const int n = sys.variable_count(), m = sys.event_count();
    const BipartiteGraph b = sys.bipartite();
    std::mt19937_64 rng(rule_seed);

    RunStats st;
    st.seed = table.seed();
    st.per_event_counts.assign(m, 0);
    std::vector<std::size_t> cursor(n, 1);
    std::vector<Value> value(n);
    for (int j = 1; j <= n; ++j) value[j - 1] = table.at(j, 1);

    auto holds = [&](int i) {
        const auto& vbl = sys.event(i).vbl;
        std::vector<Value> vals;
        vals.reserve(vbl.size());
        for (int j : vbl) vals.push_back(value[j - 1]);
        return sys.holds(i, vals);
    };
    std::set<int> violated;
    for (int i = 1; i <= m; ++i)
        if (holds(i)) violated.insert(i);

    std::vector<int> current;
    while (!violated.empty()) {
        if (st.sequence.size() >= step_cap) {
            st.truncated = true;
            break;
        }
        current.assign(violated.begin(), violated.end());
        int i = rule(current, st.sequence, rng);
        if (!violated.count(i)) throw std::logic_error("selection rule '" + rule.name() + "' chose a non-violated event");
        st.sequence.push_back(i);
        ++st.per_event_counts[i - 1];
        std::set<int> touched;
        for (int j : sys.event(i).vbl) {
            value[j - 1] = table.at(j, ++cursor[j - 1]);
            for (int k : b.events_of(j)) touched.insert(k);
        }
        for (int k : touched) {
            if (holds(k))
                violated.insert(k);
            else
                violated.erase(k);
        }
    }
    st.T = st.sequence.size();
    st.final_assignment = value;
    return st;
}

RunStats run_mt(const EventSystem& sys, const SelectionRule& rule, std::uint64_t seed, std::size_t step_cap)
{
    ResamplingTable table(sys, seed);
    return run_mt_with_table(sys, rule, table, mix64(seed ^ 0x5e1ec7ULL), step_cap);
}

unsigned worker_count()
{
    if (const char* env = std::getenv("LLL_WORKBENCH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

BatchResult estimate_expected_steps(const EventSystem& sys, const SelectionRule& rule, std::size_t trials,
                                    std::uint64_t master_seed, std::size_t step_cap)
{
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    BatchResult r;
    r.runs.resize(trials);
    const unsigned workers = std::min<std::size_t>(worker_count(), trials);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            std::uint64_t seed = derive_seed(master_seed, k);
            RunStats st = run_mt(sys, rule, seed, step_cap);
            r.runs[k] = {seed, st.T, st.truncated};
        }
    };
    if (workers <= 1) {
        work(0, trials);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, trials * w / workers, trials * (w + 1) / workers);
        for (auto& t : pool) t.join();
    }
    // Integer accumulation keeps the summary independent of the partitioning.
    unsigned __int128 sum = 0, sumsq = 0;
    for (const auto& run : r.runs) {
        if (run.truncated) {
            ++r.truncated;
            continue;
        }
        ++r.completed;
        sum += run.T;
        sumsq += static_cast<unsigned __int128>(run.T) * run.T;
    }
    if (r.completed > 0) {
        long double n = static_cast<long double>(r.completed);
        long double mean = static_cast<long double>(sum) / n;
        long double var = r.completed > 1 ? (static_cast<long double>(sumsq) - n * mean * mean) / (n - 1) : 0.0L;
        if (var < 0) var = 0;
        r.mean = static_cast<double>(mean);
        r.stderr_ = static_cast<double>(std::sqrt(var / n));
    }
    return r;
}

EventSystem extremal_cycle_instance(int l, const Rational& a)
{
    if (l < 4) throw std::invalid_argument("cycle length must be at least 4");
    if (a <= 0 || a >= 1) throw std::invalid_argument("threshold must lie in (0,1)");
    EventSystem sys;
    for (int j = 0; j < l; ++j) sys.add_variable(Distribution::uniform01());
    for (int i = 1; i <= l; ++i) {
        int next = i % l + 1;
        sys.add_box_event({{i, AllowedSet::interval(0, a)}, {next, AllowedSet::interval(a, 1)}});
    }
    return sys;
}

std::map<Edge, Rational> measure_pair_intersections(const EventSystem& sys, std::uint64_t product_cap)
{
    std::map<Edge, Rational> out;
    const DependencyGraph g = sys.base_graph();
    for (auto e : g.edges()) out[e] = sys.intersection_probability(e.first, e.second, product_cap);
    return out;
}

WDag witness_dag_of_run(const EventSystem& sys, const RunStats& stats)
{
    return wdag_from_sequence(sys.base_graph(), stats.sequence);
}

}  // namespace lll
