#include "seedaln/fastq.hpp"

#include <cctype>

#include "seedaln/errors.hpp"
#include "seedaln/genome.hpp"

namespace seedaln {

FastqReader::FastqReader(std::istream& in, uint64_t start_offset)
    : in_(in), offset_(start_offset) {
    in_.clear();
    in_.seekg(static_cast<std::streamoff>(start_offset));
}

bool FastqReader::get_line(std::string& line) {
    if (!std::getline(in_, line)) return false;
    offset_ += line.size() + 1;
    if (in_.eof() && !line.empty()) offset_ -= 1;  // no trailing newline
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::optional<Read> FastqReader::next() {
    uint64_t record_start = offset_;
    std::string name_line;
    if (!get_line(name_line)) return std::nullopt;
    if (name_line.empty() && in_.peek() == EOF) return std::nullopt;

    if (name_line.empty() || name_line[0] != '@')
        throw ParseError("FASTQ record at byte " + std::to_string(record_start) +
                             " does not start with '@'",
                         record_start);
    std::string name = name_line.substr(1);
    size_t ws = name.find_first_of(" \t");
    if (ws != std::string::npos) name.resize(ws);
    if (name.empty())
        throw ParseError("FASTQ record at byte " + std::to_string(record_start) +
                             " has an empty name",
                         record_start);

    std::string bases, plus, quals;
    if (!get_line(bases) || !get_line(plus) || !get_line(quals))
        throw ParseError("truncated FASTQ record at byte " +
                             std::to_string(record_start),
                         record_start);
    if (plus.empty() || plus[0] != '+')
        throw ParseError("FASTQ record at byte " + std::to_string(record_start) +
                             " lacks its '+' separator",
                         record_start);
    if (bases.size() != quals.size())
        throw ParseError("FASTQ record at byte " + std::to_string(record_start) +
                             ": base and quality lengths differ",
                         record_start);

    for (char& ch : bases) {
        Base b;
        if (!char_to_base(ch, b))
            throw ParseError("FASTQ record at byte " +
                                 std::to_string(record_start) +
                                 ": illegal base character",
                             record_start);
        ch = base_to_char(b);
    }
    return Read{std::move(name), std::move(bases), std::move(quals)};
}

uint64_t find_fastq_record_start(std::istream& in, uint64_t from,
                                 uint64_t file_size) {
    if (from >= file_size) return file_size;
    in.clear();

    // back up one byte so we can tell whether `from` begins a line
    uint64_t pos = from;
    if (from != 0) {
        in.seekg(static_cast<std::streamoff>(from - 1));
        if (in.get() != '\n') {
            // mid-line: skip to the start of the next line
            std::string rest;
            if (!std::getline(in, rest)) return file_size;
            pos = from + rest.size() + 1;
        }
    }

    // scan line starts for '@...' with '+...' two lines later
    std::string l0, l1, l2;
    while (pos < file_size) {
        in.clear();
        in.seekg(static_cast<std::streamoff>(pos));
        if (!std::getline(in, l0)) return file_size;
        uint64_t next = pos + l0.size() + 1;
        if (!l0.empty() && l0[0] == '@') {
            if (!std::getline(in, l1)) return file_size;
            if (std::getline(in, l2) && !l2.empty() && l2[0] == '+') return pos;
        }
        pos = next;
    }
    return file_size;
}

}  // namespace seedaln
