#include "listcolor/text_format.hpp"

#include <charconv>
#include <sstream>

namespace lc {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<TextLine> tokenize(std::string_view text) {
  std::vector<TextLine> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    TextLine line{number, {}};
    for (std::string token; in >> token;) line.tokens.push_back(std::move(token));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int parse_int(const TextLine& line, std::size_t index) {
  if (index >= line.tokens.size()) {
    throw ParseError(line.number, "missing integer after '" + line.tokens.front() + "'");
  }
  const std::string& token = line.tokens[index];
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line.number, "expected integer, got '" + token + "'");
  }
  return value;
}

void expect_token_count(const TextLine& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "'" + line.tokens.front() + "' expects " +
                                      std::to_string(count - 1) + " argument(s), got " +
                                      std::to_string(line.tokens.size() - 1));
  }
}

}  // namespace lc
