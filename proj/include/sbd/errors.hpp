#pragma once

#include <stdexcept>
#include <string>

namespace sbd {

// I/O failures: unreadable files, missing directories.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data format failures: bad UTF-8, malformed XML, unknown model versions.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sbd
