#pragma once

#include <stdexcept>
#include <string>

namespace gtq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GluingError : Error { using Error::Error; };
struct ConnectivityError : Error { using Error::Error; };
struct WeightError : Error { using Error::Error; };
// A symbolic weight does not carry enough information to decide the question asked.
struct IndeterminateError : Error { using Error::Error; };
struct NotTriangulationError : Error { using Error::Error; };
struct StructureError : Error { using Error::Error; };
struct StageError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(int line, const std::string& msg, const std::string& file = "")
      : Error((file.empty() ? "" : file + ": ") + "line " + std::to_string(line) + ": " + msg),
        line(line),
        detail(msg) {}
  int line;
  std::string detail;
};

}  // namespace gtq
