#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcjscen {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) {
    return v.str();
}

}  // namespace dcjscen
