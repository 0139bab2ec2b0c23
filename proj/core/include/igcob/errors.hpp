#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace igcob {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateEdgeId : public Error {
 public:
  explicit DuplicateEdgeId(const std::string& id) : Error("duplicate edge id '" + id + "'") {}
};

class UnknownVertex : public Error {
 public:
  UnknownVertex(const std::string& edge, const std::string& vertex)
      : Error("edge '" + edge + "' references unknown vertex '" + vertex + "'") {}
};

class InvalidId : public Error {
 public:
  explicit InvalidId(const std::string& id) : Error("malformed identifier '" + id + "'") {}
};

/// Some alternating cycle sits between boundary endpoints. `witness` holds the
/// edge ids of one such cycle.
class InfinitePathSet : public Error {
 public:
  explicit InfinitePathSet(std::vector<std::string> witness)
      : Error("infinite alternating path set"), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

/// A strongly connected component of the derived graph holds two distinct
/// simple cycles. `witness` lists the edge ids of that component.
class InfiniteCycleSet : public Error {
 public:
  explicit InfiniteCycleSet(std::vector<std::string> witness)
      : Error("infinite prime cycle set"), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

class NotAComposite : public Error {
 public:
  using Error::Error;
};

class InvalidCobordism : public Error {
 public:
  using Error::Error;
};

class InvalidGroup : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class IncompatibleGroups : public Error {
 public:
  using Error::Error;
};

class IncompatibleActions : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace igcob
