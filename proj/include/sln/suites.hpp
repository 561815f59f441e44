#pragma once

// Verification suites behind the CLI: each runs one family of checks and
// yields a machine-readable report carrying the verdict, certificates or a
// counterexample, the seed, and wall time.  Reports with the same seed and
// flags are byte-identical as JSON apart from the wall_ms fields.

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sln/deformation.hpp"

namespace sln {

struct SuiteConfig {
    uint64_t seed = 42;
    uint64_t budget = 500'000'000;
    bool allow_skip = false;
    bool parallel = false;
    std::string ring_key;  // narrows steinberg/decompose to one ring
    std::string field_key; // narrows field-based suites
    int n = 0;             // 0 = suite defaults
    std::string mode;      // steinberg: "exhaustive" | "sampled"
    std::string cache_dir; // optional group-table disk cache
};

enum class Verdict { Pass, Fail, Skipped };
const char* verdict_name(Verdict v);

struct SuiteReport {
    std::string suite;
    std::string claim; // stable statement id for the suite header
    Verdict verdict = Verdict::Pass;
    uint64_t seed = 0;
    double wall_ms = 0;
    nlohmann::json cases = nlohmann::json::object();
    nlohmann::json certificate;          // null unless the suite carries one
    nlohmann::json counterexample;       // null unless failed
};

// Shared tables across suites in one run (closure results are immutable).
class SuiteContext {
  public:
    explicit SuiteContext(const SuiteConfig& cfg) : cfg_(cfg) {}
    const SuiteConfig& config() const { return cfg_; }
    const GroupTable& sl(const std::string& field_key, int n);
    const GroupTable& sylow(const std::string& field_key, int n);
    void prebuild(); // builds every table run_all needs (for --parallel)

  private:
    const GroupTable& table(const std::string& key, std::vector<Mat> gens);
    SuiteConfig cfg_;
    std::mutex mu_;
    std::map<std::string, std::unique_ptr<GroupTable>> tables_;
};

const std::vector<std::string>& suite_names(); // the 13 runnable suites

SuiteReport run_suite(const std::string& name, SuiteContext& ctx);
// Runs all suites (in order; concurrently with cfg.parallel) and appends the
// aggregate "all" record.
std::vector<SuiteReport> run_all(SuiteContext& ctx);

nlohmann::json reports_to_json(const std::vector<SuiteReport>& reports, const SuiteConfig& cfg);
std::string reports_to_csv(const std::vector<SuiteReport>& reports);

// Exit code policy: 0 all pass, 1 any fail, 3 skipped present (unless
// allow_skip).
int exit_code_for(const std::vector<SuiteReport>& reports, const SuiteConfig& cfg);

} // namespace sln
