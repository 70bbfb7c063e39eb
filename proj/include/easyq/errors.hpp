#pragma once

#include <stdexcept>
#include <string>

namespace easyq {

struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeMismatchError : std::runtime_error {
  explicit ShapeMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

struct KindMismatchError : std::runtime_error {
  explicit KindMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NothingToRotateError : std::runtime_error {
  explicit NothingToRotateError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedImplError : std::runtime_error {
  explicit UnsupportedImplError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PrecondFailedError : std::runtime_error {
  explicit PrecondFailedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace easyq
