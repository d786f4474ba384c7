#pragma once

#include <stdexcept>
#include <string>

namespace pifrac {

/// Requested digits cannot be certified correct at the configured precision.
class accuracy_error : public std::runtime_error {
public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input (hex block, table file body, report field).
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Missing, unreadable, or unwritable file.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// The fraction table cannot supply the distinct draws an operation needs.
class degenerate_table_error : public std::runtime_error {
public:
  explicit degenerate_table_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pifrac
