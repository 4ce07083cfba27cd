#ifndef CONTLOG_PARSE_HPP
#define CONTLOG_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "contlog/syntax.hpp"

namespace contlog {

/// Lexical or structural error in formula source text, with byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses the concrete s-expression grammar. Henkin constant terms
/// ("(henkin ...)") are accepted only when allow_henkin is set.
Wff parse_wff(const std::string& text, const Signature& sig, bool allow_henkin = false);
Term parse_term(const std::string& text, const Signature& sig, bool allow_henkin = false);

} // namespace contlog

#endif
