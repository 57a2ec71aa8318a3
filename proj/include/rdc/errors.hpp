#pragma once

#include <stdexcept>
#include <string>

namespace rdc {

/// Input left the mathematical domain of an operation (log of a negative
/// bracket, division by a zero-valued jet, ...). Carries the offending value.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& what, double offending)
        : std::domain_error(what + " (value " + std::to_string(offending) + ")"),
          offending_(offending) {}

    double offending() const noexcept { return offending_; }

private:
    double offending_;
};

/// An operation was called on arguments it is not defined for at all
/// (e.g. a discriminant request for a reaction class that has none).
class UsageError : public std::logic_error {
    using std::logic_error::logic_error;
};

/// A finite expression produced NaN/Inf during evaluation.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double t, double x)
        : std::runtime_error(what + " at (t=" + std::to_string(t) +
                             ", x=" + std::to_string(x) + ")"),
          t_(t), x_(x) {}
    explicit EvaluationError(const std::string& what)
        : std::runtime_error(what), t_(0), x_(0) {}

    double t() const noexcept { return t_; }
    double x() const noexcept { return x_; }

private:
    double t_, x_;
};

/// Parameters violate a catalog/equation constraint (CLI exit code 2).
class ConstraintError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Derived data disagrees with the declared family (wrong cubic
/// classification for a solution family, ...).
class ConsistencyError : public std::logic_error {
    using std::logic_error::logic_error;
};

/// Every sampled point was rejected by the validity test (CLI exit code 3).
class EmptySampleError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The time integrator had to give up (positivity loss or an untenable
/// stability bound). Carries the node index and time (CLI exit code 5).
class SolverAbort : public std::runtime_error {
public:
    SolverAbort(const std::string& what, int node, double time)
        : std::runtime_error(what + " (node " + std::to_string(node) +
                             ", t=" + std::to_string(time) + ")"),
          node_(node), time_(time) {}

    int node() const noexcept { return node_; }
    double time() const noexcept { return time_; }

private:
    int node_;
    double time_;
};

} // namespace rdc
