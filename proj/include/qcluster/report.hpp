// Pass/fail records shared by the verification suites.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace qcluster {

struct CheckRecord {
    std::string name;
    std::map<std::string, int> params;
    std::string status;  // pass, fail or skip
    std::string details;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> normalization_used;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> records;

    int count(const std::string& status) const {
        return static_cast<int>(
            std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == status; }));
    }
    bool ok() const { return count("fail") == 0; }
};

}  // namespace qcluster
