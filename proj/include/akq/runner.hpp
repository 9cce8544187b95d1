#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "akq/cache.hpp"
#include "akq/config.hpp"
#include "akq/quantization.hpp"
#include "akq/semiclassics.hpp"
#include "akq/spectral.hpp"

namespace akq {

struct ReportRow {
    std::string claim_id;
    std::optional<int> k;
    double value = 0.0;
    std::optional<double> slope;
    std::optional<double> residual;
    bool pass = false;
};

enum class SuiteStatus { Pass, Fail, Error, Skipped };
std::string to_string(SuiteStatus s);

struct SuiteOutcome {
    std::string suite;
    std::string backend;
    SuiteStatus status = SuiteStatus::Error;
    std::string error;
    std::vector<std::string> notes;
    std::vector<ReportRow> rows;
};

struct BackendProvenance {
    std::string name;
    std::string descriptor;
    std::string hash;
    int resolution = 0;
    std::vector<int> ks;
    double nijenhuis_norm = 0.0;
};

struct RunReport {
    std::string code_version;
    std::string config_sha256;
    std::vector<BackendProvenance> backends;
    std::vector<std::string> suites;
    double tol = 0.0;
    unsigned seed = 0;
    int workers = 1;
    int window_levels = 3;
    std::vector<SuiteOutcome> outcomes;
    std::vector<std::string> job_errors;
    std::string cache_root;
    long cache_hits = 0, cache_misses = 0, cache_quarantined = 0;
    double wall_seconds = 0.0;
    double spectral_seconds = 0.0;
    std::optional<double> previous_wall_seconds;

    bool pass() const;
};

// Spectral data shared by the suites, computed once per (backend, k) and
// persisted in the content-addressed cache.
class SpaceStore {
public:
    SpaceStore(SpectraCache* cache, double tol, unsigned seed, int window_levels);

    SpectralResult band(const BackendConfig& bc, const BackendPtr& backend, int k);
    QuantumSpace spinc(const BackendConfig& bc, const BackendPtr& backend, int k);
    QuantumSpace space(const BackendConfig& bc, const BackendPtr& backend, int k, Scheme scheme);

private:
    std::string preimage(const BackendConfig& bc, const std::string& op, int k) const;

    SpectraCache* cache_;
    double tol_;
    unsigned seed_;
    int window_levels_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const SpectralResult>> bands_;
    std::map<std::string, std::shared_ptr<const QuantumSpace>> spinc_;
    std::map<std::string, Error> failed_;   // remembered so a failing job is not recomputed per suite
};

RunReport run(const RunConfig& cfg, std::ostream& log);

// Throws Error(Io) unless `dir` exists (or can be created) and accepts a file.
void preflight_output(const std::filesystem::path& dir);

void write_csv(const RunReport& report, std::ostream& out);
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);
// report.json and report.csv under `dir`.
void write_reports(const RunReport& report, const std::filesystem::path& dir);
std::string summary_line(const RunReport& report);

}  // namespace akq
