#include "seedaln/genome.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "seedaln/errors.hpp"

namespace seedaln {

namespace {

constexpr char kBaseChars[5] = {'A', 'C', 'G', 'T', 'N'};

// IUPAC nucleotide letters; everything except A/C/G/T collapses to N.
constexpr std::string_view kIupac = "ACGTUNRYSWKMBDHV";

}  // namespace

char base_to_char(Base b) { return kBaseChars[static_cast<int>(b)]; }

bool char_to_base(char c, Base& out) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    switch (u) {
        case 'A': out = Base::A; return true;
        case 'C': out = Base::C; return true;
        case 'G': out = Base::G; return true;
        case 'T': out = Base::T; return true;
        default:
            if (kIupac.find(u) != std::string_view::npos) {
                out = Base::N;
                return true;
            }
            return false;
    }
}

void PackedGenome::append_base(Base b) {
    uint64_t pos = total_length_++;
    if ((pos & 31) == 0) packed_.push_back(0);
    if ((pos & 63) == 0) n_mask_.push_back(0);
    uint64_t code = b == Base::N ? 0 : static_cast<uint64_t>(b);
    packed_[pos >> 5] |= code << ((pos & 31) * 2);
    if (b == Base::N) n_mask_[pos >> 6] |= uint64_t{1} << (pos & 63);
}

PackedGenome PackedGenome::from_fasta(std::istream& in) {
    PackedGenome g;
    std::string line;
    size_t line_no = 0;
    bool have_contig = false;

    auto close_contig = [&] {
        if (!have_contig) return;
        Contig& c = g.contigs_.back();
        c.length = g.total_length_ - c.start;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            close_contig();
            std::string name = line.substr(1);
            // header name is the first whitespace-delimited token
            size_t ws = name.find_first_of(" \t");
            if (ws != std::string::npos) name.resize(ws);
            if (name.empty())
                throw ParseError("FASTA header with empty name at line " +
                                     std::to_string(line_no),
                                 line_no);
            g.contigs_.push_back({std::move(name), g.total_length_, 0});
            have_contig = true;
            continue;
        }
        if (!have_contig)
            throw ParseError("FASTA sequence before any '>' header at line " +
                                 std::to_string(line_no),
                             line_no);
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            Base b;
            if (!char_to_base(c, b))
                throw ParseError(std::string("illegal FASTA character '") + c +
                                     "' at line " + std::to_string(line_no),
                                 line_no);
            g.append_base(b);
        }
    }
    close_contig();
    if (g.contigs_.empty())
        throw ParseError("empty FASTA input", line_no);
    return g;
}

PackedGenome PackedGenome::from_contigs(
    const std::vector<std::pair<std::string, std::string>>& named_seqs) {
    PackedGenome g;
    for (const auto& [name, seq] : named_seqs) {
        g.contigs_.push_back({name, g.total_length_, 0});
        for (char c : seq) {
            Base b;
            if (!char_to_base(c, b))
                throw std::invalid_argument(std::string("illegal base '") + c + "'");
            g.append_base(b);
        }
        g.contigs_.back().length = g.total_length_ - g.contigs_.back().start;
    }
    return g;
}

std::string PackedGenome::substring(uint64_t pos, uint64_t len) const {
    if (pos >= total_length_)
        throw std::out_of_range("genome position " + std::to_string(pos) +
                                " past end " + std::to_string(total_length_));
    uint64_t n = std::min(len, total_length_ - pos);
    std::string out;
    out.resize(n);
    for (uint64_t i = 0; i < n; ++i) out[i] = base_to_char(at(pos + i));
    return out;
}

ContigCoordinate PackedGenome::to_contig_coordinate(uint64_t pos) const {
    if (pos >= total_length_)
        throw std::out_of_range("genome position " + std::to_string(pos) +
                                " past end " + std::to_string(total_length_));
    // last contig whose start is <= pos
    auto it = std::upper_bound(
        contigs_.begin(), contigs_.end(), pos,
        [](uint64_t p, const Contig& c) { return p < c.start; });
    --it;
    return {it->name, pos - it->start};
}

uint64_t PackedGenome::to_global_offset(std::string_view contig_name,
                                        uint64_t offset) const {
    for (const Contig& c : contigs_) {
        if (c.name == contig_name) {
            if (offset >= c.length)
                throw std::out_of_range("offset " + std::to_string(offset) +
                                        " past end of contig " + c.name);
            return c.start + offset;
        }
    }
    throw std::out_of_range("unknown contig " + std::string(contig_name));
}

void PackedGenome::adopt_storage(std::vector<Contig> contigs, uint64_t total_length,
                                 std::vector<uint64_t> packed,
                                 std::vector<uint64_t> n_mask) {
    contigs_ = std::move(contigs);
    total_length_ = total_length;
    packed_ = std::move(packed);
    n_mask_ = std::move(n_mask);
}

uint64_t PackedGenome::checksum() const {
    // FNV-1a over the contig table and base codes.
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (i * 8)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(total_length_);
    for (const Contig& c : contigs_) {
        for (char ch : c.name) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
        mix(c.start);
        mix(c.length);
    }
    for (uint64_t w : packed_) mix(w);
    for (uint64_t w : n_mask_) mix(w);
    return h;
}

std::string reverse_complement(std::string_view s) {
    std::string out;
    out.resize(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        char c;
        switch (s[s.size() - 1 - i]) {
            case 'A': c = 'T'; break;
            case 'C': c = 'G'; break;
            case 'G': c = 'C'; break;
            case 'T': c = 'A'; break;
            case 'N': c = 'N'; break;
            default:
                throw std::invalid_argument(
                    "reverse_complement: non-base character");
        }
        out[i] = c;
    }
    return out;
}

}  // namespace seedaln
