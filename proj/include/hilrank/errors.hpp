#pragma once

#include <stdexcept>
#include <string>

namespace hilrank {

/// A requested matrix exceeds the configured size cap.
class size_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula with a Dehn-Sommerville precondition was applied to a complex
/// that does not satisfy it.
class not_ds_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two supposedly equivalent computation paths disagreed. Always a bug.
class inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hilrank
