#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace jp {

// All series coefficients are exact arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

}  // namespace jp
