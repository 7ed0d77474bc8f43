#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>

#include "seedaln/read.hpp"

namespace seedaln {

/// Streaming four-line FASTQ parser over a seekable stream. Tracks byte
/// offsets so a parallel driver can hand out file ranges: records are
/// owned by the range containing their first byte.
///
/// Bases are uppercased and IUPAC ambiguity codes collapse to N; a '+'
/// separator may repeat the name. Structural problems (record not
/// starting with '@', base/quality length mismatch, truncation) raise
/// ParseError with the byte offset of the offending record.
class FastqReader {
public:
    /// Positions the stream at `start_offset` (which must be a record
    /// boundary or the end of input).
    explicit FastqReader(std::istream& in, uint64_t start_offset = 0);

    /// Next record, or nullopt at end of input.
    std::optional<Read> next();

    /// Byte offset of the next unread record.
    uint64_t offset() const { return offset_; }

private:
    bool get_line(std::string& line);

    std::istream& in_;
    uint64_t offset_;
};

/// Finds the first FASTQ record starting at or after `from`: a line
/// beginning with '@' whose second-following line begins with '+'
/// (quality lines may start with '@', but the line two after a quality
/// line is a base line, which cannot start with '+'). Returns the file
/// size when there is none.
uint64_t find_fastq_record_start(std::istream& in, uint64_t from,
                                 uint64_t file_size);

}  // namespace seedaln
