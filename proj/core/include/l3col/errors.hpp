#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace l3col {

/// Malformed or out-of-range input: files, vertex ids, formulas.
/// `line()` is 1-based, or 0 when the error is not tied to a line.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, int line = 0);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A caller broke a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured bound (precolouring domain size, subset size, ...) was exceeded.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search ran out of its vertex or node budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Induced-cycle enumeration produced more results than allowed.
class EnumerationOverflow : public std::runtime_error {
 public:
  EnumerationOverflow(int length, std::size_t cap);
  int length() const noexcept { return length_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  int length_;
  std::size_t cap_;
};

/// A class solver observed something its class excludes (an undecided
/// branch where the argument guarantees a decision, a missing pattern, ...).
/// Callers are expected to fall back to exact search.
class OutOfClassError : public std::runtime_error {
 public:
  OutOfClassError(std::string solver, const std::string& detail);
  const std::string& solver() const noexcept { return solver_; }

 private:
  std::string solver_;
};

/// The instance generator could not produce a class member.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace l3col
