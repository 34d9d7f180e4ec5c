#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sbc::cli {

/// Exit codes: 0 success, 1 domain error or failed selftest, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CriterionOutcome {
    std::string name;
    bool passed = true;
    std::string summary;
    std::vector<std::string> failures;
};

struct SelftestReport {
    std::vector<CriterionOutcome> criteria;

    std::size_t failure_count() const;
    bool passed() const { return failure_count() == 0; }
};

/// Golden vectors plus invariant sweeps. A criterion runs when its name starts with filter.
/// Throws std::runtime_error when the vector file is missing or corrupt.
SelftestReport run_selftest(const std::filesystem::path& vectors, std::string_view filter);

/// Path of the golden-vector file shipped with the sources.
std::filesystem::path default_vector_path();

}  // namespace sbc::cli
