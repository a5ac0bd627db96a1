#pragma once

#include <stdexcept>
#include <string>

namespace gintail {

// Thrown when a formula is evaluated outside the asymptotic regime where it
// is meaningful (e.g. a centering sequence that is still negative at this n).
class regime_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a numerical procedure cannot certify its tolerance; carries the
// error bound that was actually achieved.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& msg, double achieved_bound)
        : std::runtime_error(msg), achieved_bound_(achieved_bound) {}
    explicit numerical_error(const std::string& msg)
        : std::runtime_error(msg), achieved_bound_(0.0) {}
    double achieved_bound() const { return achieved_bound_; }

private:
    double achieved_bound_;
};

}  // namespace gintail
