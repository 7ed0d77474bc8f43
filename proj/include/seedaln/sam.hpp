#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "seedaln/aligner.hpp"
#include "seedaln/genome.hpp"
#include "seedaln/read.hpp"

namespace seedaln {

inline constexpr uint16_t kSamFlagUnmapped = 0x4;
inline constexpr uint16_t kSamFlagReverse = 0x10;

struct SamRecord {
    std::string qname;
    uint16_t flag = kSamFlagUnmapped;
    std::string rname = "*";
    uint64_t pos = 0;  // 1-based; 0 when unmapped
    int mapq = 0;
    std::string cigar = "*";
    std::string seq;
    std::string qual;
    std::optional<int> nm;    // NM:i edit distance, mapped records only
    char result_kind = 'N';   // XR:A tag: S(ingle) / M(ultiple) / N(ot found)
};

/// @HD, one @SQ per contig, and an @PG line carrying the command line.
std::string sam_header(const PackedGenome& g, std::string_view command_line);

/// Maps an alignment outcome onto a SAM record. Single hits become
/// mapped records (MAPQ from the confidence gap); ambiguous results with
/// a known best location are mapped at quality 0; everything else is
/// unmapped. Reverse hits store the reverse-complemented sequence with
/// reversed qualities, per convention.
SamRecord make_sam_record(const AlignmentResult& result, const Read& read,
                          const PackedGenome& g);

/// The 11 mandatory fields plus our tags, tab-separated with newline.
std::string format_sam_record(const SamRecord& rec);

/// Fields of one alignment line needed by the evaluation harness.
struct SamLine {
    std::string qname;
    uint16_t flag = 0;
    std::string rname;
    uint64_t pos = 0;
    int mapq = 0;
    char result_kind = 0;       // 0 when the XR tag is absent
    std::optional<int> nm;
};

/// Parses one non-header SAM line. Throws ParseError on structural
/// problems (fewer than 11 fields, non-numeric position).
SamLine parse_sam_line(std::string_view line);

}  // namespace seedaln
