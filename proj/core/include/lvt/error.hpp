#pragma once

#include <stdexcept>
#include <string>

namespace lvt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// File contents do not follow the expected layout.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Header and payload disagree on the number of samples.
class LengthMismatchError : public FormatError {
public:
    using FormatError::FormatError;
};

/// A payload value is NaN or infinite.
class NonFiniteError : public FormatError {
public:
    using FormatError::FormatError;
};

/// Raised by sonar canonical maps for covectors with vanishing vertical part.
class InvisibleCovectorError : public Error {
public:
    using Error::Error;
};

/// A data-side covector lies outside the image of the canonical map.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

}  // namespace lvt
