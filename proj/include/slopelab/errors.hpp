#ifndef SLOPELAB_ERRORS_HPP
#define SLOPELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slopelab {

// Bad or inconsistent input. The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// chi_f = 0: the fibration is locally trivial and has no slope.
class LocallyTrivialError : public ValidationError {
public:
    LocallyTrivialError()
        : ValidationError("locally trivial: chi_f = 0, slope is undefined") {}
};

// chi_f < 0: the index vector lies outside the geometric cone.
class NegativeChiError : public ValidationError {
public:
    explicit NegativeChiError(const std::string& chi)
        : ValidationError("negative chi_f = " + chi +
                          ": index vector lies outside the geometric cone") {}
};

// An explicitly supplied s_2 disagrees with the value forced by n.
class IndexMismatchError : public ValidationError {
public:
    IndexMismatchError(const std::string& supplied, const std::string& computed)
        : ValidationError("s_2 mismatch: file supplies " + supplied +
                          " but n forces " + computed) {}
};

// A theorem-backed equality failed to hold. The CLI maps these to exit
// code 2; any occurrence on valid input is a bug or a counterexample.
class MathExpectationError : public std::runtime_error {
public:
    explicit MathExpectationError(const std::string& what) : std::runtime_error(what) {}
};

class CrossCheckError : public MathExpectationError {
public:
    explicit CrossCheckError(const std::string& what) : MathExpectationError(what) {}
};

class UnboundedError : public MathExpectationError {
public:
    explicit UnboundedError(const std::string& what)
        : MathExpectationError("LP unbounded: " + what) {}
};

class InfeasibleError : public MathExpectationError {
public:
    explicit InfeasibleError(const std::string& what)
        : MathExpectationError("LP infeasible: " + what) {}
};

}  // namespace slopelab

#endif
