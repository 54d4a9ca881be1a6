#ifndef WEYLAN_REPORT_HPP
#define WEYLAN_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace weylan {

/// FNV-1a 64-bit content digest, hex-encoded.
std::string content_digest(const std::string& bytes);

/// One CLI run: payload lines plus named pass/fail checks. Deterministic for
/// identical input bytes except for the timing field.
class RunReport {
public:
    RunReport(std::string command, std::string input_digest)
        : command_(std::move(command)), input_digest_(std::move(input_digest)) {}

    void field(const std::string& key, const std::string& value);
    void check(const std::string& name, bool pass, const std::string& residual = "");

    bool all_pass() const;
    void set_elapsed_ms(std::int64_t ms) { elapsed_ms_ = ms; }

    std::string text() const;
    std::string json() const;

private:
    struct Check {
        std::string name;
        bool pass;
        std::string residual;
    };

    std::string command_;
    std::string input_digest_;
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<Check> checks_;
    std::int64_t elapsed_ms_ = 0;
};

} // namespace weylan

#endif
