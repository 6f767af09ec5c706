#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace weylstrata {

using BigInt = boost::multiprecision::cpp_int;

} // namespace weylstrata
