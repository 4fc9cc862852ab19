#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slidesearch {

/// Malformed input data: bad row, bad hex, unreadable or corrupt
/// database files. `line` is 1-based when the error concerns a
/// specific line of a JSON-lines file, 0 otherwise.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what, std::uint64_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::uint64_t line() const noexcept { return line_; }

private:
    std::uint64_t line_;
};

}  // namespace slidesearch
