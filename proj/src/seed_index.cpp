#include "seedaln/seed_index.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "seedaln/errors.hpp"

namespace seedaln {

namespace {

constexpr char kMagic[8] = {'S', 'N', 'A', 'P', 'I', 'D', 'X', '1'};
constexpr char kEndMarker[8] = {'S', 'N', 'A', 'P', 'E', 'N', 'D', '1'};

template <typename T>
void put(std::ostream& out, T v) {
    // little-endian scalar
    unsigned char buf[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i) buf[i] = (v >> (i * 8)) & 0xff;
    out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!in) throw FormatError("truncated index file");
    T v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v |= T(buf[i]) << (i * 8);
    return v;
}

void put_words(std::ostream& out, const std::vector<uint64_t>& words) {
    put<uint64_t>(out, words.size());
    for (uint64_t w : words) put(out, w);
}

std::vector<uint64_t> get_words(std::istream& in, uint64_t sane_limit) {
    uint64_t n = get<uint64_t>(in);
    if (n > sane_limit) throw FormatError("corrupt index file: bad array size");
    std::vector<uint64_t> words(n);
    for (uint64_t i = 0; i < n; ++i) words[i] = get<uint64_t>(in);
    return words;
}

}  // namespace

bool pack_seed(std::string_view seed, uint64_t& out) {
    uint64_t key = 0;
    for (char c : seed) {
        Base b;
        if (!char_to_base(c, b) || b == Base::N) return false;
        key = (key << 2) | static_cast<uint64_t>(b);
    }
    out = key;
    return true;
}

uint64_t packed_reverse_complement(uint64_t key, int seed_size) {
    // A<->T and C<->G are 2-bit complements, so flip all bits and
    // reverse the 2-bit groups.
    uint64_t x = ~key;
    x = ((x & 0x3333333333333333ull) << 2) | ((x >> 2) & 0x3333333333333333ull);
    x = ((x & 0x0f0f0f0f0f0f0f0full) << 4) | ((x >> 4) & 0x0f0f0f0f0f0f0f0full);
    x = __builtin_bswap64(x);
    return x >> (64 - 2 * seed_size);
}

std::vector<SeedHit> LookupResult::materialize() const {
    std::vector<SeedHit> hits;
    hits.reserve(count());
    for (uint64_t p : forward) hits.push_back({p, Direction::Forward});
    for (uint64_t p : rc) hits.push_back({p, Direction::ReverseComplement});
    return hits;
}

SeedIndex SeedIndex::build(const PackedGenome& g, int seed_size) {
    if (seed_size < 1 || seed_size > 32)
        throw std::invalid_argument("seed size must be in [1, 32]");
    if (g.size() < static_cast<uint64_t>(seed_size))
        throw std::invalid_argument("genome shorter than seed size");

    SeedIndex idx;
    idx.seed_size_ = seed_size;
    idx.genome_checksum_ = g.checksum();

    const uint64_t s = static_cast<uint64_t>(seed_size);
    const uint64_t mask = s == 32 ? ~uint64_t{0} : (uint64_t{1} << (2 * s)) - 1;

    std::vector<std::pair<uint64_t, uint64_t>> entries;  // (key, position)
    entries.reserve(g.size());

    uint64_t key = 0;
    int64_t last_n = -1;  // most recent N position
    for (uint64_t pos = 0; pos < g.size(); ++pos) {
        Base b = g.at(pos);
        if (b == Base::N) {
            last_n = static_cast<int64_t>(pos);
            key = (key << 2) & mask;
            continue;
        }
        key = ((key << 2) | static_cast<uint64_t>(b)) & mask;
        if (pos + 1 < s) continue;
        uint64_t start = pos + 1 - s;
        if (static_cast<int64_t>(start) <= last_n) continue;  // window has an N
        entries.emplace_back(key, start);
    }

    std::sort(entries.begin(), entries.end());

    idx.keys_.reserve(entries.size() / 2 + 1);
    idx.offsets_.reserve(entries.size() / 2 + 2);
    idx.positions_.reserve(entries.size());
    for (const auto& [k, p] : entries) {
        if (idx.keys_.empty() || idx.keys_.back() != k) {
            idx.keys_.push_back(k);
            idx.offsets_.push_back(idx.positions_.size());
        }
        idx.positions_.push_back(p);
    }
    idx.offsets_.push_back(idx.positions_.size());
    return idx;
}

LookupResult SeedIndex::lookup(std::string_view seed) const {
    if (seed.size() != static_cast<size_t>(seed_size_))
        throw std::invalid_argument("seed length does not match index seed size");

    auto probe = [this](uint64_t key) -> std::span<const uint64_t> {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
        if (it == keys_.end() || *it != key) return {};
        size_t i = static_cast<size_t>(it - keys_.begin());
        return std::span<const uint64_t>(positions_)
            .subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
    };

    uint64_t key;
    if (!pack_seed(seed, key)) return {};  // seeds with N are never indexed
    return {probe(key), probe(packed_reverse_complement(key, seed_size_))};
}

void save_index_file(const SeedIndex& idx, const PackedGenome& g,
                     std::ostream& out) {
    if (idx.genome_checksum_ != g.checksum())
        throw FormatError("index does not belong to this genome");

    out.write(kMagic, 8);
    put<uint32_t>(out, idx.format_version_);
    put<uint32_t>(out, static_cast<uint32_t>(idx.seed_size_));
    put<uint64_t>(out, idx.genome_checksum_);

    put<uint64_t>(out, g.contigs().size());
    for (const Contig& c : g.contigs()) {
        put<uint32_t>(out, static_cast<uint32_t>(c.name.size()));
        out.write(c.name.data(), static_cast<std::streamsize>(c.name.size()));
        put<uint64_t>(out, c.start);
        put<uint64_t>(out, c.length);
    }
    put<uint64_t>(out, g.size());
    put_words(out, g.packed_words());
    put_words(out, g.n_mask_words());

    put_words(out, idx.keys_);
    put_words(out, idx.offsets_);
    put_words(out, idx.positions_);
    out.write(kEndMarker, 8);
    if (!out) throw IoError("failed writing index file");
}

std::pair<SeedIndex, PackedGenome> load_index_file(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || !std::equal(magic, magic + 8, kMagic))
        throw FormatError("not a seed index file (bad magic)");

    SeedIndex idx;
    uint32_t version = get<uint32_t>(in);
    if (version != idx.format_version_)
        throw FormatError("index format version mismatch: file has " +
                          std::to_string(version) + ", expected " +
                          std::to_string(idx.format_version_));
    idx.seed_size_ = static_cast<int>(get<uint32_t>(in));
    if (idx.seed_size_ < 1 || idx.seed_size_ > 32)
        throw FormatError("corrupt index file: bad seed size");
    idx.genome_checksum_ = get<uint64_t>(in);

    constexpr uint64_t kSaneLimit = uint64_t{1} << 40;
    uint64_t contig_count = get<uint64_t>(in);
    if (contig_count > kSaneLimit) throw FormatError("corrupt index file");
    std::vector<Contig> contigs(contig_count);
    for (Contig& c : contigs) {
        uint32_t len = get<uint32_t>(in);
        c.name.resize(len);
        in.read(c.name.data(), len);
        if (!in) throw FormatError("truncated index file");
        c.start = get<uint64_t>(in);
        c.length = get<uint64_t>(in);
    }
    uint64_t genome_length = get<uint64_t>(in);
    auto packed = get_words(in, kSaneLimit);
    auto n_mask = get_words(in, kSaneLimit);
    if (packed.size() != (genome_length + 31) / 32 ||
        n_mask.size() != (genome_length + 63) / 64)
        throw FormatError("corrupt index file: genome size mismatch");

    PackedGenome g;
    g.adopt_storage(std::move(contigs), genome_length, std::move(packed),
                    std::move(n_mask));

    idx.keys_ = get_words(in, kSaneLimit);
    idx.offsets_ = get_words(in, kSaneLimit);
    idx.positions_ = get_words(in, kSaneLimit);
    if (idx.offsets_.size() != idx.keys_.size() + 1 ||
        (idx.offsets_.empty() ? 0 : idx.offsets_.back()) != idx.positions_.size())
        throw FormatError("corrupt index file: inconsistent tables");

    char marker[8];
    in.read(marker, 8);
    if (!in || !std::equal(marker, marker + 8, kEndMarker))
        throw FormatError("truncated index file");

    if (g.checksum() != idx.genome_checksum_)
        throw FormatError("genome checksum mismatch");
    return {std::move(idx), std::move(g)};
}

}  // namespace seedaln
