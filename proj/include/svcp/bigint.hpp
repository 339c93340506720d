#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace svcp {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace svcp
