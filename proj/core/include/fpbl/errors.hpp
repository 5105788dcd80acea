#pragma once

#include <stdexcept>
#include <string>

namespace fpbl {

/// Thrown when a request is well-formed but falls outside what the library
/// supports (budget exceeded, unsupported pattern/mode combination, ...).
/// The message always names the legal alternatives.
class Refusal : public std::runtime_error {
 public:
  explicit Refusal(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpbl
