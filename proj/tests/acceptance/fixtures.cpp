#include "fixtures.hpp"

#include <random>
#include <vector>

namespace fixtures {

std::string random_sequence(uint64_t seed, size_t length) {
    static const char acgt[] = "ACGT";
    std::mt19937_64 rng(seed);
    std::string s;
    s.reserve(length);
    for (size_t i = 0; i < length; ++i) s += acgt[rng() % 4];
    return s;
}

namespace {

// copy with per-base substitutions at `divergence` and sparse 1-2 base indels
std::string diverge(std::mt19937_64& rng, const std::string& src,
                    double divergence, double indel_rate) {
    static const char acgt[] = "ACGT";
    std::string out;
    out.reserve(src.size() + 8);
    auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    for (size_t i = 0; i < src.size(); ++i) {
        double r = unit();
        if (r < divergence) {
            char b;
            do {
                b = acgt[rng() % 4];
            } while (b == src[i]);
            out += b;
        } else if (r < divergence + indel_rate) {
            if (rng() & 1) {
                out += src[i];
                out += acgt[rng() % 4];
            }
            // else: drop the base
        } else {
            out += src[i];
        }
    }
    return out;
}

void splice(std::string& genome, std::mt19937_64& rng, const std::string& block) {
    if (block.size() >= genome.size()) return;
    size_t at = rng() % (genome.size() - block.size());
    genome.replace(at, block.size(), block);
}

}  // namespace

namespace {

// near-duplicate cluster in the style of real genomes: a consensus with
// biallelic variant sites every `site_spacing` bases, each copy an
// independent allele combination. Every seed-sized window is shared by
// many copies, so no seed is private to one copy, yet a read-sized
// window usually pins down a single copy.
void plant_mosaic_family(std::string& genome, std::mt19937_64& rng,
                         uint64_t seed, size_t copies, size_t copy_len,
                         size_t site_spacing) {
    static const char acgt[] = "ACGT";
    std::string consensus = random_sequence(seed, copy_len);
    std::vector<std::pair<size_t, char>> sites;
    for (size_t p = site_spacing / 2; p < copy_len; p += site_spacing) {
        char alt;
        do {
            alt = acgt[rng() % 4];
        } while (alt == consensus[p]);
        sites.push_back({p, alt});
    }
    for (size_t i = 0; i < copies; ++i) {
        std::string copy = consensus;
        for (const auto& [pos, alt] : sites)
            if (rng() & 1) copy[pos] = alt;
        splice(genome, rng, copy);
    }
}

// block duplicated verbatim: reads inside it are unresolvable at any
// setting, but scoring its copies is real work
void plant_exact_family(std::string& genome, std::mt19937_64& rng,
                        uint64_t seed, size_t copies, size_t copy_len) {
    std::string block = random_sequence(seed, copy_len);
    for (size_t i = 0; i < copies; ++i) splice(genome, rng, block);
}

}  // namespace

seedaln::PackedGenome evaluation_reference(uint64_t seed, size_t length,
                                           int contigs) {
    std::mt19937_64 rng(seed);
    std::string genome = random_sequence(seed ^ 0x9e3779b97f4a7c15ull, length);

    // high-copy diverged repeat family (SINE-like): ~3% of the sequence
    std::string family = random_sequence(seed + 1, 300);
    size_t copies = length / 11000;
    for (size_t i = 0; i < copies; ++i)
        splice(genome, rng, diverge(rng, family, 0.08, 0.002));

    // near-duplicate clusters whose per-seed hit counts straddle the
    // usual h_max settings, plus one exact-duplicate block family
    size_t unit = std::max<size_t>(1, length / 5000000);
    plant_mosaic_family(genome, rng, seed + 11, 150 * unit, 150, 6);
    plant_mosaic_family(genome, rng, seed + 12, 450 * unit, 150, 6);
    plant_mosaic_family(genome, rng, seed + 13, 1000 * unit, 150, 6);
    plant_exact_family(genome, rng, seed + 14, 350 * unit, 150);

    // low-divergence segmental duplications: pairs of 15 kb blocks
    size_t seg_len = std::min<size_t>(15000, length / 20);
    for (int i = 0; i < 6 && seg_len > 1000; ++i) {
        size_t from = rng() % (genome.size() - seg_len);
        std::string block = diverge(rng, genome.substr(from, seg_len), 0.015, 0.0005);
        splice(genome, rng, block);
    }

    // repetitive runs: homopolymers and a microsatellite
    splice(genome, rng, std::string(2000, 'A'));
    splice(genome, rng, std::string(1500, 'T'));
    std::string at_run;
    for (int i = 0; i < 1000; ++i) at_run += "AT";
    splice(genome, rng, at_run);

    std::vector<std::pair<std::string, std::string>> named;
    size_t per = genome.size() / static_cast<size_t>(contigs);
    for (int i = 0; i < contigs; ++i) {
        size_t begin = static_cast<size_t>(i) * per;
        size_t len = i + 1 == contigs ? genome.size() - begin : per;
        named.emplace_back("chr" + std::to_string(i + 1),
                           genome.substr(begin, len));
    }
    return seedaln::PackedGenome::from_contigs(named);
}

}  // namespace fixtures
