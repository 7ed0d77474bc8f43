#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "seedaln/genome.hpp"

namespace seedaln {

enum class Direction : uint8_t { Forward = 0, ReverseComplement = 1 };

/// One strand-tagged index hit: `position` is the start of the matched
/// window on the forward strand of the genome.
struct SeedHit {
    uint64_t position;
    Direction direction;
    bool operator==(const SeedHit&) const = default;
};

/// Result of a seed lookup. Forward entries are windows equal to the
/// query seed; rc entries are windows whose reverse complement equals it.
/// Spans point into index storage and stay valid for the index lifetime.
struct LookupResult {
    std::span<const uint64_t> forward;
    std::span<const uint64_t> rc;
    size_t count() const { return forward.size() + rc.size(); }
    std::vector<SeedHit> materialize() const;
};

/// Hash index from fixed-length seeds to genome positions, built over
/// every overlapping window of the forward strand. Reverse-complement
/// occurrences are resolved at lookup time by probing the RC of the
/// query, which keeps one stored entry per window while behaving like an
/// index populated with both strands. Windows containing N are skipped.
///
/// Storage is a sorted key array plus CSR position lists, so the on-disk
/// layout is bit-reproducible for a given genome and seed size.
class SeedIndex {
public:
    /// Requires 1 <= seed_size <= 32 (a seed packs into one word) and
    /// genome length >= seed_size.
    static SeedIndex build(const PackedGenome& g, int seed_size);

    /// Exact-string lookup. A seed containing N (never indexed) or an
    /// unknown seed yields an empty result. Throws std::invalid_argument
    /// on wrong seed length.
    LookupResult lookup(std::string_view seed) const;

    int seed_size() const { return seed_size_; }
    uint64_t genome_checksum() const { return genome_checksum_; }
    uint32_t format_version() const { return format_version_; }

    /// One entry per N-free window of the genome.
    uint64_t total_positions() const { return positions_.size(); }
    uint64_t distinct_seeds() const { return keys_.size(); }

private:
    friend void save_index_file(const SeedIndex&, const PackedGenome&,
                                std::ostream&);
    friend std::pair<SeedIndex, PackedGenome> load_index_file(std::istream&);

    int seed_size_ = 0;
    uint64_t genome_checksum_ = 0;
    uint32_t format_version_ = 1;
    std::vector<uint64_t> keys_;      // sorted packed forward windows
    std::vector<uint64_t> offsets_;   // keys_.size() + 1 entries
    std::vector<uint64_t> positions_; // window starts, ascending per key
};

/// Packs an N-free seed into 2-bit codes, first base in the high bits.
/// Returns false when the seed contains anything outside {A,C,G,T}.
bool pack_seed(std::string_view seed, uint64_t& out);

/// Reverse complement of a packed seed.
uint64_t packed_reverse_complement(uint64_t key, int seed_size);

/// Binary index file, genome embedded so alignment needs only this file.
/// Layout (all integers little-endian):
///   magic "SNAPIDX1" | u32 format_version | u32 seed_size
///   u64 genome_checksum
///   u64 contig_count, then per contig: u32 name_len, name, u64 start, u64 length
///   u64 genome_length, u64 packed_word_count, packed words,
///   u64 nmask_word_count, nmask words
///   u64 key_count, keys, offsets (key_count+1), u64 position_count, positions
///   end marker "SNAPEND1"
void save_index_file(const SeedIndex& idx, const PackedGenome& g,
                     std::ostream& out);

/// Validates magic, version, structural sizes, end marker, and that the
/// stored checksum matches the embedded genome. Throws FormatError.
std::pair<SeedIndex, PackedGenome> load_index_file(std::istream& in);

}  // namespace seedaln
