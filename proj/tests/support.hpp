#ifndef CIRCFIB_TESTS_SUPPORT_HPP
#define CIRCFIB_TESTS_SUPPORT_HPP

#include <optional>
#include <string_view>

#include "circfib/errors.hpp"
#include "circfib/group.hpp"

namespace test {

inline circfib::CircWord w(std::string_view s) { return circfib::CircWord::parse(s); }
inline circfib::GroupElement e(std::string_view s) { return circfib::GroupElement::parse(s); }

// Kind of the circfib::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<circfib::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const circfib::Error& err) {
    return err.kind();
  }
  return std::nullopt;
}

}  // namespace test

#endif  // CIRCFIB_TESTS_SUPPORT_HPP
