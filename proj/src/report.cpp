#include "nlie/report.hpp"

namespace nlie {

std::string to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "fail";
}

void Report::fail(const std::string& what) {
    status = Status::Fail;
    details["mismatches"].push_back(what);
}

void Report::require(bool ok, const std::string& what) {
    if (!ok) fail(what);
}

Json Report::to_json() const {
    Json j;
    j["check"] = check;
    j["n"] = n;
    j["status"] = to_string(status);
    j["details"] = details;
    if (wall_time_ms)
        j["wall_time_ms"] = *wall_time_ms;
    else
        j["wall_time_ms"] = nullptr;
    return j;
}

std::string Report::to_line() const { return to_json().dump(); }

}  // namespace nlie
