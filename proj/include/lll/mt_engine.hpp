#ifndef LLL_MT_ENGINE_HPP
#define LLL_MT_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lll/events.hpp"
#include "lll/wdag.hpp"

namespace lll {

// Picks one event out of the currently violated ones (sorted, nonempty).
class SelectionRule {
public:
    using Fn = std::function<int(const std::vector<int>& violated, const std::vector<int>& history, std::mt19937_64& rng)>;

    SelectionRule(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    static SelectionRule lowest_index();
    static SelectionRule uniform_random();
    // Smallest violated event among the last resampled one and its neighbours, else the lowest.
    static SelectionRule recent_neighbor(const DependencyGraph& g);
    static SelectionRule by_name(const std::string& name, const DependencyGraph& g);
    static std::vector<std::string> names();

    const std::string& name() const { return name_; }
    int operator()(const std::vector<int>& violated, const std::vector<int>& history, std::mt19937_64& rng) const
    {
        return fn_(violated, history, rng);
    }

private:
    std::string name_;
    Fn fn_;
};

inline constexpr std::size_t kDefaultStepCap = 1'000'000;

struct RunStats {
    std::uint64_t seed = 0;
    std::vector<int> sequence;
    std::size_t T = 0;
    bool truncated = false;
    std::vector<Value> final_assignment;        // index j-1
    std::vector<std::size_t> per_event_counts;  // index i-1
};

RunStats run_mt(const EventSystem& sys, const SelectionRule& rule, std::uint64_t seed,
                std::size_t step_cap = kDefaultStepCap);
RunStats run_mt_with_table(const EventSystem& sys, const SelectionRule& rule, const ResamplingTable& table,
                           std::uint64_t rule_seed, std::size_t step_cap = kDefaultStepCap);

struct RunRecord {
    std::uint64_t seed = 0;
    std::size_t T = 0;
    bool truncated = false;
};

struct BatchResult {
    double mean = 0, stderr_ = 0;
    std::size_t completed = 0, truncated = 0;
    std::vector<RunRecord> runs;  // in run order
};

// Run k uses derive_seed(master_seed, k); results do not depend on the worker count.
BatchResult estimate_expected_steps(const EventSystem& sys, const SelectionRule& rule, std::size_t trials,
                                    std::uint64_t master_seed, std::size_t step_cap = kDefaultStepCap);

// Workers for batch runs: LLL_WORKBENCH_THREADS if set, else the hardware concurrency.
unsigned worker_count();

// l uniform variables; A_i = [X_i < a] and [X_{i+1} >= a], indices cyclic.
EventSystem extremal_cycle_instance(int l, const Rational& a);

std::map<Edge, Rational> measure_pair_intersections(const EventSystem& sys, std::uint64_t product_cap = 10'000'000);

WDag witness_dag_of_run(const EventSystem& sys, const RunStats& stats);

}  // namespace lll

#endif
