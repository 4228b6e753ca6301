#pragma once

#include <stdexcept>
#include <string>

namespace qharm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Specialization at a root of the denominator.
struct PoleAtQ0 : Error {
    explicit PoleAtQ0(const std::string& what) : Error("PoleAtQ0: " + what) {}
};

// Arithmetic between cyclotomic elements of different root-of-unity orders.
struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& what) : Error("OrderMismatch: " + what) {}
};

// Operation defined only for a single set of variables (l = 1).
struct NotSingleSet : Error {
    explicit NotSingleSet(const std::string& what) : Error("NotSingleSet: " + what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("ShapeMismatch: " + what) {}
};

// Target multidegree of an operator matrix has a negative entry.
struct DegreeUnderflow : Error {
    explicit DegreeUnderflow(const std::string& what) : Error("DegreeUnderflow: " + what) {}
};

// Group order exceeds the enumeration limit.
struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("TooLarge: " + what) {}
};

// A group image escapes the span of the given basis.
struct NotStable : Error {
    explicit NotStable(const std::string& what) : Error("NotStable: " + what) {}
};

// Hilbert data is not symmetric under permuting the degree axes.
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error("NotSymmetric: " + what) {}
};

// A closed form was requested at a parameter value where it is invalid.
struct SingularQ : Error {
    explicit SingularQ(const std::string& what) : Error("SingularQ: " + what) {}
};

}  // namespace qharm
