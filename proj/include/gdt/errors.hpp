#ifndef GDT_ERRORS_HPP
#define GDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gdt {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error("shape error: " + msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error("data error: " + msg) {}
};

struct StateError : std::runtime_error {
    explicit StateError(const std::string& msg) : std::runtime_error("state error: " + msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error("numeric error: " + msg) {}
};

struct DecisionError : std::runtime_error {
    explicit DecisionError(const std::string& msg) : std::runtime_error("decision error: " + msg) {}
};

struct EmptyBufferError : std::runtime_error {
    explicit EmptyBufferError(const std::string& msg) : std::runtime_error("empty buffer: " + msg) {}
};

}  // namespace gdt

#endif
