#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ostrowski {

/// Lexical or syntax error in a function expression. position is a byte
/// offset into the original source text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Evaluation left the mathematical domain: ln of a non-positive value,
/// sqrt of a negative, division by zero, a fractional power of a negative
/// base, or a function evaluated outside its declared validity interval.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive integration exhausted its evaluation budget, or a refinement
/// loop could not reach its target.
class integration_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ostrowski
