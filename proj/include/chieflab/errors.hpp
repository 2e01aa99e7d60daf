#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chieflab {

/// Malformed textual input (cycle strings, group files, construction
/// expressions). `position` is a character offset or a line number,
/// depending on what produced it.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size limit (element cap, lattice node cap, chief series
/// enumeration limit) was exceeded.
class ResourceCapError : public std::runtime_error {
 public:
  ResourceCapError(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace chieflab
