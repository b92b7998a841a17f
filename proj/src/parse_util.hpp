#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hopftrees/error.hpp"

namespace hopftrees::detail {

// Minimal recursive-descent cursor shared by the literal parsers.
class Cursor {
   public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const noexcept { return pos_; }
    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }

    bool accept(char ch) {
        if (peek() != ch || at_end()) return false;
        ++pos_;
        return true;
    }
    void expect(char ch, const char* what) {
        if (!accept(ch)) fail(what);
    }
    void expect_prefix(std::string_view prefix) {
        if (text_.substr(pos_, prefix.size()) != prefix) fail("'" + std::string(prefix) + "'");
        pos_ += prefix.size();
    }
    void expect_end() {
        if (!at_end()) fail("end of input");
    }
    int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("a digit");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1000000) fail("a smaller integer");
        }
        return static_cast<int>(v);
    }
    int digit() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("a digit");
        return text_[pos_++] - '0';
    }
    [[noreturn]] void fail(const std::string& expected) const { throw parse_error(std::string(text_), pos_, expected); }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace hopftrees::detail
