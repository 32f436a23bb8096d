#include "l3col/errors.hpp"

#include <utility>

namespace l3col {

namespace {

std::string with_line(const std::string& what, int line) {
  if (line <= 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

InputError::InputError(const std::string& what, int line)
    : std::runtime_error(with_line(what, line)), line_(line) {}

EnumerationOverflow::EnumerationOverflow(int length, std::size_t cap)
    : std::runtime_error("more than " + std::to_string(cap) + " induced C" +
                         std::to_string(length) + " cycles"),
      length_(length),
      cap_(cap) {}

OutOfClassError::OutOfClassError(std::string solver, const std::string& detail)
    : std::runtime_error(solver + ": input outside the solver's class: " + detail),
      solver_(std::move(solver)) {}

}  // namespace l3col
