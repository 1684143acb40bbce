#pragma once

#include <stdexcept>

namespace indyn {

// Enumeration or size budget would be exceeded. The CLI maps this to exit
// code 3, everything derived from std::invalid_argument to exit code 2.
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace indyn
