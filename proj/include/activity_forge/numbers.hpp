#ifndef ACTIVITY_FORGE_NUMBERS_HPP
#define ACTIVITY_FORGE_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace forge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace forge

#endif  // ACTIVITY_FORGE_NUMBERS_HPP
