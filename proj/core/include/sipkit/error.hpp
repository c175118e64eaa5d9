#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sipkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on argument values was violated (bad sigma, dimension
/// mismatch, mask without background, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Filesystem or codec failure.
class IoError : public Error {
 public:
  using Error::Error;
};

class FileNotFoundError : public IoError {
 public:
  explicit FileNotFoundError(const std::string& path)
      : IoError("file not found: " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// The file is readable but its magic bytes match no supported format.
class UnsupportedFormatError : public IoError {
 public:
  using IoError::IoError;
};

/// The file claims a supported format but its contents are malformed.
/// `offset()` is the byte position where decoding failed.
class CorruptFileError : public IoError {
 public:
  CorruptFileError(const std::string& what, std::size_t offset)
      : IoError(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace sipkit
