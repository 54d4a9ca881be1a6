#include "weylan/report.hpp"

#include <sstream>

#include <json.hpp>

namespace weylan {

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
    return os.str();
}

void RunReport::field(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
}

void RunReport::check(const std::string& name, bool pass, const std::string& residual) {
    checks_.push_back({name, pass, residual});
}

bool RunReport::all_pass() const {
    for (const Check& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string RunReport::text() const {
    std::ostringstream os;
    os << "command: " << command_ << "\n";
    os << "input: " << input_digest_ << "\n";
    for (const auto& [k, v] : fields_) os << k << ": " << v << "\n";
    if (!checks_.empty()) {
        os << "checks:\n";
        for (const Check& c : checks_) {
            os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
            if (!c.residual.empty()) os << " -- " << c.residual;
            os << "\n";
        }
    }
    os << "result: " << (all_pass() ? "pass" : "fail") << "\n";
    os << "elapsed_ms: " << elapsed_ms_ << "\n";
    return os.str();
}

std::string RunReport::json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["input_digest"] = input_digest_;
    for (const auto& [k, v] : fields_) j["fields"][k] = v;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks_) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.residual.empty()) cj["residual"] = c.residual;
        j["checks"].push_back(cj);
    }
    j["result"] = all_pass() ? "pass" : "fail";
    j["elapsed_ms"] = elapsed_ms_;
    return j.dump(2) + "\n";
}

} // namespace weylan
