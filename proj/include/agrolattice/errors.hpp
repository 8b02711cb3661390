#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agro {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLabel : public Error {
 public:
  UnknownLabel(std::string name, std::string axis)
      : Error("unknown " + axis + " label '" + name + "'"), name_(std::move(name)), axis_(std::move(axis)) {}
  const std::string& name() const { return name_; }
  const std::string& axis() const { return axis_; }

 private:
  std::string name_;
  std::string axis_;
};

class EmptyAxis : public Error {
 public:
  explicit EmptyAxis(const std::string& axis) : Error("axis '" + axis + "' has no labels") {}
};

class DuplicateLabel : public Error {
 public:
  DuplicateLabel(const std::string& name, const std::string& axis)
      : Error("duplicate " + axis + " label '" + name + "'") {}
};

class IndexOutOfBounds : public Error {
 public:
  using Error::Error;
};

class AxisMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NodeNotInLattice : public Error {
 public:
  using Error::Error;
};

class UndefinedConfidence : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateHeader : public Error {
 public:
  explicit DuplicateHeader(const std::string& column) : Error("duplicate header column '" + column + "'") {}
};

}  // namespace agro
