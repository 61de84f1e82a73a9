#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmseq/analysis.hpp"
#include "pmseq/json_io.hpp"

namespace pmseq {

/// Recipe for a planted sequence instance. With a limit label set, the
/// sequence equals the limit everywhere except on the exception set, where
/// the exception pattern applies; without one the base pattern drives the
/// sequence. Fixed seed means byte-identical downstream reports.
struct PlantSpec {
    std::shared_ptr<const PMSpace> space;
    std::string limit;  // empty = none
    std::optional<Pattern> base;
    SetDescription exceptions = SetDescription::empty_set();
    Pattern exception_values = Pattern::constant("");
    std::string lambda_name = "identity";
    Index horizon = kDefaultHorizon;
    double eps = kDefaultEps;
    std::uint64_t seed = 42;
};

PlantSpec plant_spec_from_json(const Json& j);
Json to_json(const PlantSpec& spec);

/// Materializes the sequence; throws std::invalid_argument on inconsistent
/// specs (exception pattern containing the limit label, bad horizon or eps).
SymbolicSequence generate(const PlantSpec& spec);

struct SuiteConfig {
    std::vector<std::string> ids;  // empty = all entries
    int instances = 100;
    std::uint64_t seed = 42;
    Index horizon = kDefaultHorizon;
    double eps = kDefaultEps;
    std::string witness_dir;     // empty = no witness files
    std::string inject_fault;    // testing aid, e.g. "axiom3"
};

struct SuiteEntryResult {
    std::string id;
    int instances = 0;
    int passed = 0;
    bool pass = false;
    std::string first_counterexample;  // short description, empty when pass
};

struct SuiteReport {
    std::uint64_t seed = 0;
    Index horizon = 0;
    double eps = 0.0;
    int instances = 0;
    std::vector<SuiteEntryResult> entries;
    bool overall_pass = true;
};

/// Names of all registered suite entries, in execution order.
std::vector<std::string> suite_entry_ids();

/// Runs every requested entry over seeded instances. Failures become report
/// entries (with replayable witness JSON files when witness_dir is set),
/// never crashes. Unknown entry ids throw std::invalid_argument.
SuiteReport run_suite(const SuiteConfig& config);

Json to_json(const SuiteReport& report);

}  // namespace pmseq
