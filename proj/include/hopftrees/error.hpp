#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopftrees {

/// Raised when an operation's precondition on its arguments is violated.
class invalid_input : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the literal parsers; carries the offending position and what was expected there.
class parse_error : public invalid_input {
   public:
    parse_error(std::string text, std::size_t position, std::string expected)
        : invalid_input("parse error at position " + std::to_string(position) + " in \"" + text +
                        "\": expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

   private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace hopftrees
