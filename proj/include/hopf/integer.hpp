#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hopf {

// Exact scalars for every structure constant.
using Integer = boost::multiprecision::cpp_int;

}  // namespace hopf
