#ifndef CIRCFIB_ERRORS_HPP
#define CIRCFIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circfib {

enum class ErrorKind {
  domain,
  capacity,
  inapplicable_move,
  zero_word,
  normalization,
  resource,
  structural_mismatch,
  partition,
  classification,
};

/// Base of every error thrown by the library. The kind selects the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error domain_error(const std::string& what) { return Error(ErrorKind::domain, what); }
inline Error resource_error(const std::string& what) { return Error(ErrorKind::resource, what); }

}  // namespace circfib

#endif  // CIRCFIB_ERRORS_HPP
