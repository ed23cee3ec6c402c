#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ggrey::verify {

enum class Status { Pass, Fail, Info };

// One named check. Pass iff |computed - reference| <= tolerance, where the
// tolerance is absolute, or relative to |reference| when `relative` is set.
// Info records document known formula discrepancies without failing a run.
struct CheckRecord {
    std::string id;
    std::string description;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool relative = false;
    Status status = Status::Pass;
};

struct VerifyConfig {
    std::size_t n_paths = 20000;
    std::uint64_t seed = 12345;
    double tol_scale = 1.0;  // multiplies every tolerance
};

struct Report {
    std::vector<CheckRecord> checks;

    std::size_t count(Status s) const;
    bool all_pass() const { return count(Status::Fail) == 0; }

    // Human-readable rendering, one line per check plus a summary.
    void write_text(std::ostream& os) const;
    // Line-delimited records: id|status|computed|reference|tolerance
    void write_records(std::ostream& os) const;
};

// Names accepted by run_suite, "all" included.
const std::vector<std::string>& suite_names();

// Runs the named check suite. Throws std::invalid_argument for an unknown
// suite name.
Report run_suite(const std::string& name, const VerifyConfig& cfg = {});

} // namespace ggrey::verify
