#pragma once

#include <stdexcept>
#include <string>

namespace seedaln {

/// Malformed input text (FASTA/FASTQ/SAM). Carries the line or byte
/// position where parsing gave up.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, size_t where)
        : std::runtime_error(std::move(msg)), where_(where) {}
    size_t where() const { return where_; }

private:
    size_t where_;
};

/// Bad binary artifact: wrong magic, version or checksum mismatch,
/// truncated stream.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace seedaln
