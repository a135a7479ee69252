#ifndef COGREY_ERRORS_HPP
#define COGREY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cogrey {

// Base of every library error. The three direct children partition errors
// by how the CLI reports them: ConfigError -> exit 2, DataError -> exit 3,
// NumericError -> exit 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

class NonPositivePart : public DataError {
public:
    explicit NonPositivePart(const std::string& msg) : DataError(msg) {}
};

class DegenerateDimension : public DataError {
public:
    explicit DegenerateDimension(const std::string& msg) : DataError(msg) {}
};

class DimensionMismatch : public DataError {
public:
    explicit DimensionMismatch(const std::string& msg) : DataError(msg) {}
};

class LengthMismatch : public DataError {
public:
    explicit LengthMismatch(const std::string& msg) : DataError(msg) {}
};

class UnmappedSource : public DataError {
public:
    explicit UnmappedSource(const std::string& msg) : DataError(msg) {}
};

class EmptyColumn : public DataError {
public:
    explicit EmptyColumn(const std::string& msg) : DataError(msg) {}
};

class BadSplit : public DataError {
public:
    explicit BadSplit(const std::string& msg) : DataError(msg) {}
};

class SingularMatrix : public NumericError {
public:
    explicit SingularMatrix(const std::string& msg) : NumericError(msg) {}
};

class DegenerateSeries : public NumericError {
public:
    explicit DegenerateSeries(const std::string& msg) : NumericError(msg) {}
};

class SingularNormalEquations : public NumericError {
public:
    explicit SingularNormalEquations(const std::string& msg) : NumericError(msg) {}
};

class ZeroReference : public NumericError {
public:
    explicit ZeroReference(const std::string& msg) : NumericError(msg) {}
};

class AllCoordinatesSkipped : public NumericError {
public:
    explicit AllCoordinatesSkipped(const std::string& msg) : NumericError(msg) {}
};

}  // namespace cogrey

#endif
