#pragma once

#include <string>

namespace motivic {

/// Outcome of one identity check, with both sides rendered for inspection.
struct CheckReport {
  std::string identity;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

}  // namespace motivic
