#ifndef SPRINGER_BIGINT_HPP
#define SPRINGER_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace springer {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace springer

#endif  // SPRINGER_BIGINT_HPP
