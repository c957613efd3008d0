#pragma once

#include <stdexcept>
#include <string>

namespace jp {

// Raised when a computation cannot be carried out exactly within the
// requested truncation orders (e.g. a z = 1 specialization whose z-support
// is not provably contained in the table).
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the jagged-partition / overpartition correspondence is
// violated (repeated or zero overlined part, no or multiple reassemblies).
class BijectionError : public std::runtime_error {
public:
    explicit BijectionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jp
