#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jp {

/// Outcome of one identity verification.  A failing report carries a witness
/// (the first mismatching coefficient); a passing one records the range that
/// was verified.
struct IdentityReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;  // ordered
    int z_max = -1;  // -1 when not applicable
    int q_max = -1;
    bool pass = true;

    struct Witness {
        std::string relation;  // which sub-identity failed
        int z_exp = -1;
        int q_exp = -1;
        std::string lhs, rhs;
    };
    std::optional<Witness> witness;
    std::string verified;  // short description of what was checked

    void add_param(const std::string& key, long long value) {
        params.emplace_back(key, std::to_string(value));
    }
    void add_param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void fail(Witness w) {
        if (pass) {  // keep the first witness
            pass = false;
            witness = std::move(w);
        }
    }
};

}  // namespace jp
