#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lc {

// Raised by every file parser; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct TextLine {
  int number = 0;
  std::vector<std::string> tokens;
};

// Splits input into whitespace-separated tokens per line. Text from `#` to the
// end of a line is a comment; blank and comment-only lines are dropped.
std::vector<TextLine> tokenize(std::string_view text);

int parse_int(const TextLine& line, std::size_t index);
void expect_token_count(const TextLine& line, std::size_t count);

}  // namespace lc
