#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hessbasis/json_io.hpp"

namespace hessbasis {

enum class CheckStatus { Pass, Fail, Skipped };

// Expected values carry a provenance label: "published-table" for rows read
// off the reference tables, "derived-oracle" for values computed by an
// independent route, "trivial" for definitional facts.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string expected;
    std::string computed;
    std::string provenance;
    double millis = 0.0;
};

struct RunReport {
    std::string profile;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    // include_timing=false gives the byte-stable form (timing is the only
    // run-dependent field).
    Json to_json(bool include_timing = true) const;
    void print(std::ostream& os) const;
};

// Profiles nest: quick (dihedral, small classical, H3/F4, products,
// decomposition) < full (adds H4/E6 censuses, all six orbit/regularity/
// candidate checks including E7/E8 certification from the published ratios)
// < long (adds the E7 census; ~3M elements, needs roughly 1.5 GB).
RunReport run_selfcheck(const std::string& profile);

} // namespace hessbasis
