#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace nlie {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

/// One verification record. A failing report carries its mismatch evidence in details.
struct Report {
    Report() = default;
    Report(std::string check_name, int arity) : check(std::move(check_name)), n(arity) {}

    std::string check;
    int n = 0;
    Status status = Status::Pass;
    Json details = Json::object();
    std::optional<double> wall_time_ms;

    bool passed() const { return status == Status::Pass; }
    /// Marks the report failed and appends a mismatch note.
    void fail(const std::string& what);
    /// Records a boolean sub-check; a false value fails the report.
    void require(bool ok, const std::string& what);

    Json to_json() const;
    std::string to_line() const;
};

}  // namespace nlie
