#ifndef GRIDFREQ_ERRORS_HPP
#define GRIDFREQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gridfreq {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class TooFewSamples : public Error {
public:
    explicit TooFewSamples(const std::string& what) : Error(what) {}
};

class DegenerateDistribution : public Error {
public:
    explicit DegenerateDistribution(const std::string& what) : Error(what) {}
};

class LagNotAligned : public Error {
public:
    explicit LagNotAligned(const std::string& what) : Error(what) {}
};

class LagExceedsSeries : public Error {
public:
    explicit LagExceedsSeries(const std::string& what) : Error(what) {}
};

class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& what) : Error(what) {}
};

class InputEmpty : public Error {
public:
    explicit InputEmpty(const std::string& what) : Error(what) {}
};

class InternalOrderingError : public Error {
public:
    explicit InternalOrderingError(const std::string& what) : Error(what) {}
};

class UnstableDiscretization : public Error {
public:
    explicit UnstableDiscretization(const std::string& what) : Error(what) {}
};

class InsufficientScales : public Error {
public:
    explicit InsufficientScales(const std::string& what) : Error(what) {}
};

class FitDiverged : public Error {
public:
    explicit FitDiverged(const std::string& what) : Error(what) {}
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(const std::string& what) : Error(what) {}
};

class ReportEmpty : public Error {
public:
    explicit ReportEmpty(const std::string& what) : Error(what) {}
};

} // namespace gridfreq

#endif // GRIDFREQ_ERRORS_HPP
