#pragma once

#include <concepts>
#include <ostream>
#include <string>

namespace hcyl {

template <class T>
concept Printable = requires(const T& t) {
  { t.to_string() } -> std::convertible_to<std::string>;
};

template <Printable T>
std::ostream& operator<<(std::ostream& os, const T& x) {
  return os << x.to_string();
}

}  // namespace hcyl
