#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "skewrank/enumerate.hpp"
#include "skewrank/graph.hpp"

namespace skewrank {

struct CheckOutcome {
    enum class Status { Pass, Fail, Skip, Info };
    Status status = Status::Pass;
    std::string details;

    static CheckOutcome pass() { return {}; }
    static CheckOutcome fail(std::string why) { return {Status::Fail, std::move(why)}; }
    static CheckOutcome skip(std::string why) { return {Status::Skip, std::move(why)}; }
    static CheckOutcome info(std::string why) { return {Status::Info, std::move(why)}; }
};

struct CheckContext {
    Family family = Family::Trees;
    std::uint64_t seed = 1;  // per graph, derived from the sweep seed
};

/// A named property evaluated graph by graph. Info outcomes are recorded but
/// never count as counterexamples.
struct CheckDef {
    std::string id;
    std::string description;
    std::vector<Family> families;
    std::function<CheckOutcome(const Graph&, const CheckContext&)> run;
};

const std::vector<CheckDef>& check_registry();
const CheckDef& find_check(const std::string& id);  // throws std::invalid_argument
std::vector<std::string> default_checks(Family f);

struct Counterexample {
    std::string graph6;
    std::string check;
    std::string details;
};

struct CheckTally {
    long pass = 0;
    long fail = 0;
    long skip = 0;
    long info = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<Counterexample> notes;  // informational outcomes
};

struct SweepReport {
    Family family = Family::Trees;
    int min_order = 1;
    int max_order = 0;
    std::uint64_t seed = 1;
    long graph_count = 0;
    std::map<int, long> counts_by_order;
    std::map<std::string, CheckTally> checks;

    std::vector<Counterexample> counterexamples() const;
    bool ok() const;
};

struct SweepOptions {
    std::vector<std::string> checks;  // empty: default_checks(family)
    int min_order = 0;                // 0: the family's smallest order
    int jobs = 1;
    std::uint64_t seed = 1;
};

/// Runs the checks over every class of every order from min_order to n.
/// Results do not depend on `jobs`. Throws CapExceeded when n is above the
/// family cap and std::invalid_argument for unknown check ids.
SweepReport run_sweep(Family family, int n, const SweepOptions& options = {});

/// Runs a single check on one graph, mapping exceptions to outcomes.
CheckOutcome run_check(const CheckDef& check, const Graph& g, const CheckContext& ctx);

std::string to_json(const SweepReport& report, int indent = 2);
/// One header line plus one line per check: check,pass,fail,skip,info.
std::string to_csv(const SweepReport& report);

/// Unicyclic graphs of diameter <= 3 with mr^- equal to that of a diametrical
/// path, up to max_order vertices. Leaves hanging from the same vertex are
/// collapsed to one; `skeletons` lists the distinct results per diameter.
struct SmallCaseCatalog {
    int max_order = 0;
    std::map<int, std::vector<std::string>> members;    // diameter -> graph6
    std::map<int, std::vector<std::string>> skeletons;  // diameter -> graph6
};

SmallCaseCatalog small_case_catalog(int max_order);

/// g with all but one leaf removed at every vertex carrying several leaves.
Graph collapse_twin_leaves(const Graph& g);

std::string to_json(const SmallCaseCatalog& catalog, int indent = 2);

}  // namespace skewrank
