#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieq/matrix.hpp"

namespace lieq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One failed identity, with the generator indices involved and the vector
/// that should have vanished.
struct ValidationIssue {
  std::string kind;
  std::vector<std::size_t> indices;
  Vec witness;

  std::string describe() const {
    std::string s = kind + "(";
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(indices[k] + 1);
    }
    return s + ") witness " + to_string(witness);
  }
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string kind, std::vector<std::size_t> idx, Vec witness) {
    issues.push_back({std::move(kind), std::move(idx), std::move(witness)});
  }
  void merge(const ValidationReport& o) {
    issues.insert(issues.end(), o.issues.begin(), o.issues.end());
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& i : issues) {
      if (!s.empty()) s += "; ";
      s += i.describe();
    }
    return s;
  }
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("validation failed: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class NotWellDefined : public Error {
 public:
  NotWellDefined(const std::string& what, Vec witness)
      : Error(what + ": relation " + to_string(witness) + " not sent into the target lattice"),
        witness_(std::move(witness)) {}
  const Vec& witness() const { return witness_; }

 private:
  Vec witness_;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class BracketNotWellDefined : public Error {
 public:
  BracketNotWellDefined(const std::string& what, Vec witness)
      : Error(what + " " + to_string(witness)), witness_(std::move(witness)) {}
  const Vec& witness() const { return witness_; }

 private:
  Vec witness_;
};

class NotAbelianInput : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateBracket : public Error {
 public:
  DuplicateBracket(std::size_t line, std::size_t i, std::size_t j)
      : Error("line " + std::to_string(line) + ": bracket [" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + "] given twice"),
        i_(i), j_(j) {}
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_, j_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace lieq
