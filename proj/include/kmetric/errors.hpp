#pragma once

#include <stdexcept>
#include <string>

namespace kmetric {

// Every failure the library reports deliberately; the CLI maps these to exit codes.
enum class ErrorCode {
  InvalidOrder,       // family constructor given an order outside its range
  DisconnectedGraph,  // operation needs finite distances everywhere
  SameVertex,         // pair operations require two distinct vertices
  TrivialGraph,       // operation needs at least two vertices
  KTooLarge,          // requested k exceeds the dimensional k of the graph
  Infeasible,         // exclusions leave some pair under-distinguishable
  ResourceExhausted,  // search node budget spent before a proof
  ParseError,         // bad expression or edge-list input
  OutOfRange,         // closed formula queried outside its stated range
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kmetric
