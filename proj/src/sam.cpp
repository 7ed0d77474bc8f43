#include "seedaln/sam.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "seedaln/errors.hpp"

namespace seedaln {

std::string sam_header(const PackedGenome& g, std::string_view command_line) {
    std::string h = "@HD\tVN:1.6\tSO:unknown\n";
    for (const Contig& c : g.contigs()) {
        h += "@SQ\tSN:" + c.name + "\tLN:" + std::to_string(c.length) + "\n";
    }
    h += "@PG\tID:seedaln\tPN:seedaln\tCL:";
    h += command_line;
    h += "\n";
    return h;
}

SamRecord make_sam_record(const AlignmentResult& result, const Read& read,
                          const PackedGenome& g) {
    SamRecord rec;
    rec.qname = read.name;
    rec.seq = read.bases;
    rec.qual = read.qualities.empty() ? "*" : read.qualities;

    switch (result.kind) {
        case ResultKind::SingleHit:
            rec.result_kind = 'S';
            break;
        case ResultKind::MultipleHits:
            rec.result_kind = 'M';
            break;
        case ResultKind::NotFound:
            rec.result_kind = 'N';
            break;
    }

    if (!result.has_position) return rec;  // unmapped placeholder record

    ContigCoordinate coord = g.to_contig_coordinate(result.position);
    rec.flag = 0;
    rec.rname = coord.contig_name;
    rec.pos = coord.offset_in_contig + 1;
    rec.cigar = std::to_string(read.bases.size()) + "M";
    rec.nm = result.distance;
    rec.mapq = result.kind == ResultKind::SingleHit
                   ? std::min(60, 10 * result.gap)
                   : 0;
    if (result.direction == Direction::ReverseComplement) {
        rec.flag |= kSamFlagReverse;
        rec.seq = reverse_complement(read.bases);
        if (rec.qual != "*")
            std::reverse(rec.qual.begin(), rec.qual.end());
    }
    return rec;
}

std::string format_sam_record(const SamRecord& rec) {
    std::string line;
    line.reserve(rec.seq.size() * 2 + rec.qname.size() + 64);
    line += rec.qname;
    line += '\t';
    line += std::to_string(rec.flag);
    line += '\t';
    line += rec.rname;
    line += '\t';
    line += std::to_string(rec.pos);
    line += '\t';
    line += std::to_string(rec.mapq);
    line += '\t';
    line += rec.cigar;
    line += "\t*\t0\t0\t";  // RNEXT, PNEXT, TLEN: single-end
    line += rec.seq.empty() ? "*" : rec.seq;
    line += '\t';
    line += rec.qual;
    if (rec.nm) {
        line += "\tNM:i:";
        line += std::to_string(*rec.nm);
    }
    line += "\tXR:A:";
    line += rec.result_kind;
    line += '\n';
    return line;
}

SamLine parse_sam_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (start <= line.size()) {
        size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    if (fields.size() < 11)
        throw ParseError("SAM line with fewer than 11 fields", 0);

    auto parse_u64 = [&](std::string_view s, const char* what) -> uint64_t {
        uint64_t v = 0;
        auto [p, e] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (e != std::errc() || p != s.data() + s.size())
            throw ParseError(std::string("SAM line with bad ") + what, 0);
        return v;
    };

    SamLine out;
    out.qname = std::string(fields[0]);
    out.flag = static_cast<uint16_t>(parse_u64(fields[1], "FLAG"));
    out.rname = std::string(fields[2]);
    out.pos = parse_u64(fields[3], "POS");
    out.mapq = static_cast<int>(parse_u64(fields[4], "MAPQ"));
    for (size_t i = 11; i < fields.size(); ++i) {
        std::string_view f = fields[i];
        if (f.rfind("XR:A:", 0) == 0 && f.size() == 6) out.result_kind = f[5];
        if (f.rfind("NM:i:", 0) == 0)
            out.nm = static_cast<int>(parse_u64(f.substr(5), "NM tag"));
    }
    return out;
}

}  // namespace seedaln
