#ifndef HADWIGER_ERRORS_HH
#define HADWIGER_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hadwiger
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed input text. The offset is the zero-based byte position
    /// within the offending line.
    class ParseError : public Error
    {
        private:
            std::size_t _offset;

        public:
            ParseError(const std::string & message, std::size_t offset) :
                Error(message + " (at byte " + std::to_string(offset) + ")"),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t { return _offset; }
    };

    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    /// An input is larger than an exact oracle is configured to handle.
    class LimitExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// A documented precondition of an algorithm does not hold for the input.
    class PreconditionViolated : public Error
    {
        public:
            using Error::Error;
    };

    /// A proven lower bound was not met. Always indicates a defect somewhere.
    class BoundViolated : public Error
    {
        public:
            using Error::Error;
    };
}

#endif
