#ifndef FRACDIFF_ERRORS_HPP
#define FRACDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracdiff {

// Parameter outside its admissible domain (bad alpha, non-SPD matrix, ...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to converge. Carries the partial value
// accumulated before giving up.
class eval_error : public std::runtime_error {
public:
    eval_error(const std::string& what, double partial)
        : std::runtime_error(what), partial_(partial) {}
    double partial() const { return partial_; }

private:
    double partial_;
};

// Explicit time stepping blew up. Carries the step index and the magnitude
// that tripped the abort.
class instability_error : public std::runtime_error {
public:
    instability_error(const std::string& what, long step, double max_value)
        : std::runtime_error(what), step_(step), max_value_(max_value) {}
    long step() const { return step_; }
    double max_value() const { return max_value_; }

private:
    long step_;
    double max_value_;
};

} // namespace fracdiff

#endif
