#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbracket::detail {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Whitespace tokenizer over a text stream with `#` comments stripped.
class Tokens {
 public:
  explicit Tokens(std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens_.push_back({tok, lineno});
    }
  }

  bool done() const noexcept { return pos_ >= tokens_.size(); }

  const std::string& peek() const {
    if (done()) throw ParseError("unexpected end of input");
    return tokens_[pos_].text;
  }

  std::string next() {
    if (done()) throw ParseError("unexpected end of input");
    return tokens_[pos_++].text;
  }

  int line() const noexcept {
    if (tokens_.empty()) return 0;
    return tokens_[done() ? tokens_.size() - 1 : pos_].line;
  }

  void expect(const std::string& keyword) {
    const int at = line();
    std::string tok = next();
    if (tok != keyword) {
      throw ParseError("line " + std::to_string(at) + ": expected '" + keyword + "', got '" + tok +
                       "'");
    }
  }

  std::int64_t integer() {
    const int at = line();
    std::string tok = next();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw ParseError("line " + std::to_string(at) + ": expected integer, got '" + tok + "'");
    }
    return v;
  }

 private:
  struct Token {
    std::string text;
    int line;
  };
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace pbracket::detail
