#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace seedaln {

/// Per-position base code. Anything that is not a concrete A/C/G/T
/// (IUPAC ambiguity codes included) is stored as N.
enum class Base : uint8_t { A = 0, C = 1, G = 2, T = 3, N = 4 };

char base_to_char(Base b);

/// Maps an input character to a base code. Lowercase is accepted,
/// IUPAC ambiguity codes collapse to N. Returns false for characters
/// that are not legal sequence letters at all.
bool char_to_base(char c, Base& out);

struct Contig {
    std::string name;
    uint64_t start = 0;   // global offset of the first base
    uint64_t length = 0;
};

struct ContigCoordinate {
    std::string contig_name;
    uint64_t offset_in_contig = 0;  // 0-based
};

/// Immutable packed reference sequence. Bases are stored 2-bit with an
/// N bitmask on the side; contigs tile [0, size()) exactly in file order.
/// Safe for concurrent reads once built.
class PackedGenome {
public:
    PackedGenome() = default;

    /// Parses FASTA text. Headers start with '>', sequence lines are
    /// IUPAC letters, whitespace is dropped, case is ignored.
    static PackedGenome from_fasta(std::istream& in);

    /// Builds a single- or multi-contig genome directly from strings.
    static PackedGenome from_contigs(
        const std::vector<std::pair<std::string, std::string>>& named_seqs);

    uint64_t size() const { return total_length_; }

    Base at(uint64_t pos) const {
        uint64_t code = (packed_[pos >> 5] >> ((pos & 31) * 2)) & 3;
        if (n_mask_[pos >> 6] >> (pos & 63) & 1) return Base::N;
        return static_cast<Base>(code);
    }

    /// Bases [pos, pos+len) as text; truncated at the genome end.
    /// Throws std::out_of_range when pos is past the end.
    std::string substring(uint64_t pos, uint64_t len) const;

    ContigCoordinate to_contig_coordinate(uint64_t pos) const;

    /// Inverse of to_contig_coordinate. Throws if the contig is unknown
    /// or the offset exceeds its length.
    uint64_t to_global_offset(std::string_view contig_name, uint64_t offset) const;

    const std::vector<Contig>& contigs() const { return contigs_; }

    /// Digest over contig table and base codes; used to tie index files
    /// to the genome they were built from.
    uint64_t checksum() const;

    // Raw packed storage, used by index serialization.
    const std::vector<uint64_t>& packed_words() const { return packed_; }
    const std::vector<uint64_t>& n_mask_words() const { return n_mask_; }
    void adopt_storage(std::vector<Contig> contigs, uint64_t total_length,
                       std::vector<uint64_t> packed, std::vector<uint64_t> n_mask);

private:
    void append_base(Base b);

    uint64_t total_length_ = 0;
    std::vector<uint64_t> packed_;  // 32 bases per word, 2 bits each
    std::vector<uint64_t> n_mask_;  // 64 positions per word
    std::vector<Contig> contigs_;
};

/// Reversed sequence with A<->T, C<->G; N maps to N.
/// Throws std::invalid_argument on characters outside {A,C,G,T,N}.
std::string reverse_complement(std::string_view s);

}  // namespace seedaln
