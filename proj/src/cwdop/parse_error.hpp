#ifndef CWDOP_PARSE_ERROR_HPP
#define CWDOP_PARSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cwdop {

// Raised by the scenario and recording readers; messages carry the
// offending line or row number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace cwdop

#endif
