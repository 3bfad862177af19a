#ifndef SATLAB_VERIFY_HPP
#define SATLAB_VERIFY_HPP

#include <string>
#include <vector>

#include "satlab/enumeration.hpp"

namespace satlab {

enum class CaseStatus { pass, fail, skipped_out_of_range };

std::string to_string(CaseStatus s);

struct VerifyCase {
    std::string description;
    std::string expected;
    std::string actual;
    CaseStatus status;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    double wall_time = 0.0;  // seconds
    bool all_passed() const;
};

/// Suite names accepted by run_suite and the CLI `verify` subcommand.
const std::vector<std::string>& suite_names();

/// Runs one named suite over its (n, pattern) grid. n_max < 0 selects the
/// suite default; grid points below a formula's validity threshold are
/// reported as skipped, never dropped.
VerificationReport run_suite(const std::string& name, int n_max, const SearchOptions& opts);

/// JSON object {suite, cases: [...], wall_time}; cases are byte-deterministic
/// for fixed inputs and code version.
std::string report_to_json(const VerificationReport& r);

std::string report_to_text(const VerificationReport& r);

/// The saturation-number comparison table (prior thresholds vs the ranges
/// verified here) as TSV; thresholds are probed from the formula validity
/// flags, not hard-coded.
std::string table1_tsv();

}  // namespace satlab

#endif
