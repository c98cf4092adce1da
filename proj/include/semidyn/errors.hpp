#pragma once

#include <stdexcept>
#include <string>

namespace semidyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(int requested, int cap)
        : Error("composition degree " + std::to_string(requested) +
                " exceeds cap " + std::to_string(cap)),
          requested(requested), cap(cap) {}
    int requested;
    int cap;
};

struct NoConvergence : Error {
    explicit NoConvergence(int sweeps)
        : Error("root iteration did not converge after " + std::to_string(sweeps) + " sweeps"),
          sweeps(sweeps) {}
    int sweeps;
};

struct NoRepellingSeed : Error {
    NoRepellingSeed() : Error("no repelling fixed point found for seed generator") {}
};

struct EmptyResult : Error {
    explicit EmptyResult(const std::string& what) : Error(what) {}
};

struct NotEscaped : Error {
    NotEscaped() : Error("orbit did not escape within the given number of steps") {}
};

struct RayStalled : Error {
    RayStalled() : Error("external ray: gradient step underflow before landing") {}
};

struct OpenContour : Error {
    OpenContour() : Error("contour exits the grid; grid too small") {}
};

struct AmbiguousTopology : Error {
    explicit AmbiguousTopology(const std::string& what) : Error(what) {}
};

struct Disconnected : Error {
    Disconnected() : Error("no path from sample point to base point within region") {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct InvalidDegreePair : Error {
    InvalidDegreePair()
        : Error("(d, deg h) = (2,2) is excluded by the attachment bound") {}
};

struct CertificateFailed : Error {
    CertificateFailed(std::string step_, double margin_)
        : Error("certificate failed at step '" + step_ + "' with margin " + std::to_string(margin_)),
          step(std::move(step_)), margin(margin_) {}
    std::string step;
    double margin;
};

struct NotFound : Error {
    explicit NotFound(int n_max)
        : Error("no power n <= " + std::to_string(n_max) + " certifies"), n_max(n_max) {}
    int n_max;
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace semidyn
