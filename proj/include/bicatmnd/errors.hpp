#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bicatmnd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad tables, dangling identifiers, duplicate names.
class InputError : public Error {
 public:
  using Error::Error;
};

class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

class UnresolvedNameError : public InputError {
 public:
  UnresolvedNameError(std::string name, const std::string& context)
      : InputError("unresolved name '" + name + "'" + (context.empty() ? "" : " in " + context)),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Cells whose sources/targets do not line up for the requested operation.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured size bound.
class ResourceBoundError : public Error {
 public:
  using Error::Error;
};

// A construction needs a universal-property witness that the search did not find.
class MissingWitnessError : public Error {
 public:
  using Error::Error;
};

struct Violation {
  std::string law;
  std::vector<std::string> witnesses;
};

// Empty iff every checked law instance holds.
struct LawReport {
  std::vector<Violation> violations;
  std::size_t instances_checked = 0;

  bool empty() const { return violations.empty(); }
  bool mentions(const std::string& law) const {
    for (const auto& v : violations)
      if (v.law == law) return true;
    return false;
  }
  void add(std::string law, std::vector<std::string> witnesses) {
    violations.push_back({std::move(law), std::move(witnesses)});
  }
  void merge(const LawReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    instances_checked += other.instances_checked;
  }
};

}  // namespace bicatmnd
