#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spi/blackbox.hpp"
#include "spi/decode.hpp"

namespace spi {

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Instance file:
//   %SPI 1
//   field p=<prime>
//   basis power|cheb1
//   bounds B=<n> D=<n> E=<n>
//   seed <n>
//   poly t=<n>           followed by t lines   term <degree> <coeff>
//   errors k=<n>         followed by k lines   err <point> <value>
//   probes k=<n>         optional; k lines     pt <point>
// '#' starts a comment; blank lines are ignored.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

struct ResultFile {
  PrimeField field;
  Basis basis;
  int N;
  std::vector<Candidate> candidates;
  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

// Result file:
//   %SPI-RESULT 1
//   field p=<prime>
//   basis power|cheb1
//   N <n>
//   candidate t=<n>      followed by t term lines and
//   mismatches <count> [<block>:<index> ...]
std::string serialize_result(const ResultFile& result);
ResultFile parse_result(std::string_view text);

// Polynomial file: `poly t=<n>` followed by t term lines.
std::string serialize_poly(const SparsePoly& f);
SparsePoly parse_poly(std::string_view text, const PrimeField& field, Basis basis);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace spi
