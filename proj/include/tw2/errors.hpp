#pragma once

#include <stdexcept>
#include <string>

namespace tw2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input document violated the edge-list format. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what, int cluster_id = -1)
      : Error(what), cluster_id_(cluster_id) {}
  int cluster_id() const { return cluster_id_; }

 private:
  int cluster_id_;
};

/// A branch trace is not consistent with the graph it claims to describe.
class TraceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tw2
