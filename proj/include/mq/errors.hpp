#ifndef MQ_ERRORS_HPP
#define MQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mq {

/// Malformed input: bad documents, dimension mismatches, illegal moves.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured bound was exceeded (canonical-form vertex cap, etc.).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mq

#endif
