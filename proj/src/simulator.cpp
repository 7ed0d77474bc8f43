#include "seedaln/simulator.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace seedaln {

namespace {

constexpr char kAcgt[4] = {'A', 'C', 'G', 'T'};
constexpr int kMaxPlacementAttempts = 10000;

char random_base(std::mt19937_64& rng) {
    return kAcgt[rng() & 3];
}

char random_other_base(char c, std::mt19937_64& rng) {
    char b;
    do {
        b = random_base(rng);
    } while (b == c);
    return b;
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void SimProfile::validate() const {
    if (read_length < 1) throw std::invalid_argument("read length must be >= 1");
    auto rate = [](double r, const char* what) {
        if (!(r >= 0.0 && r <= 1.0))
            throw std::invalid_argument(std::string(what) + " must be in [0, 1]");
    };
    rate(snp_rate, "snp rate");
    rate(indel_mutation_rate, "indel mutation rate");
    rate(seq_error_rate, "sequencing error rate");
    rate(indel_error_fraction, "indel error fraction");
}

std::string encode_truth(const Truth& t) {
    return t.contig + "_" + std::to_string(t.position + 1) + "_" +
           (t.direction == Direction::Forward ? "F" : "R") + "_" +
           std::to_string(t.serial);
}

std::optional<Truth> decode_truth(const std::string& name) {
    // contig may contain '_', so split off the last three fields
    size_t u3 = name.rfind('_');
    if (u3 == std::string::npos || u3 == 0) return std::nullopt;
    size_t u2 = name.rfind('_', u3 - 1);
    if (u2 == std::string::npos || u2 == 0) return std::nullopt;
    size_t u1 = name.rfind('_', u2 - 1);
    if (u1 == std::string::npos || u1 == 0) return std::nullopt;

    std::string_view pos_s(name.data() + u1 + 1, u2 - u1 - 1);
    std::string_view dir_s(name.data() + u2 + 1, u3 - u2 - 1);
    std::string_view ser_s(name.data() + u3 + 1, name.size() - u3 - 1);
    if (dir_s != "F" && dir_s != "R") return std::nullopt;

    uint64_t pos1 = 0, serial = 0;
    auto [pp, pe] = std::from_chars(pos_s.data(), pos_s.data() + pos_s.size(), pos1);
    if (pe != std::errc() || pp != pos_s.data() + pos_s.size() || pos1 == 0)
        return std::nullopt;
    auto [sp, se] = std::from_chars(ser_s.data(), ser_s.data() + ser_s.size(), serial);
    if (se != std::errc() || sp != ser_s.data() + ser_s.size())
        return std::nullopt;

    Truth t;
    t.contig = name.substr(0, u1);
    t.position = pos1 - 1;
    t.direction = dir_s == "F" ? Direction::Forward : Direction::ReverseComplement;
    t.serial = serial;
    return t;
}

ReadSimulator::ReadSimulator(const PackedGenome& g, SimProfile profile)
    : genome_(g), profile_(profile), rng_(profile.rng_seed) {
    profile_.validate();
    for (const Contig& c : g.contigs())
        if (c.length >= profile_.read_length)
            placeable_ += c.length - profile_.read_length + 1;
    if (placeable_ == 0)
        throw std::invalid_argument(
            "no contig is long enough for the requested read length");
}

uint64_t ReadSimulator::pick_locus(std::string& contig_out, uint64_t& offset_out) {
    uint64_t u = rng_() % placeable_;
    for (const Contig& c : genome_.contigs()) {
        if (c.length < profile_.read_length) continue;
        uint64_t span = c.length - profile_.read_length + 1;
        if (u < span) {
            contig_out = c.name;
            offset_out = u;
            return c.start + u;
        }
        u -= span;
    }
    throw std::logic_error("locus sampling out of range");
}

SimulatedRead ReadSimulator::next() {
    const size_t len = profile_.read_length;

    for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
        std::string contig;
        uint64_t offset = 0;
        uint64_t global = pick_locus(contig, offset);
        bool reverse = (rng_() & 1) != 0;

        // extract with slack so deletions cannot run the template dry
        size_t slack = 64 + len / 4;
        std::string extract = genome_.substring(global, len + slack);
        if (extract.size() < len) continue;
        if (std::string_view(extract.data(), len).find('N') !=
            std::string_view::npos)
            continue;  // locus overlaps N: redraw

        // germline-style mutations
        std::string mutated;
        mutated.reserve(extract.size() + 8);
        for (size_t i = 0; i < extract.size();) {
            char base = extract[i];
            if (base == 'N') {
                mutated += base;
                ++i;
                continue;
            }
            double r = unit_real(rng_);
            if (r < profile_.snp_rate) {
                mutated += random_other_base(base, rng_);
                ++i;
            } else if (r < profile_.snp_rate + profile_.indel_mutation_rate) {
                size_t k = 1 + rng_() % 3;
                if ((rng_() & 1) != 0) {
                    mutated += base;
                    for (size_t j = 0; j < k; ++j) mutated += random_base(rng_);
                    ++i;
                } else {
                    i += k;  // deletion
                }
            } else {
                mutated += base;
                ++i;
            }
        }

        // sequencing errors
        std::string observed;
        observed.reserve(mutated.size() + 8);
        for (char base : mutated) {
            if (observed.size() >= len + 8) break;
            double r = unit_real(rng_);
            if (r >= profile_.seq_error_rate) {
                observed += base;
                continue;
            }
            if (unit_real(rng_) < profile_.indel_error_fraction) {
                if ((rng_() & 1) != 0) {
                    observed += base;
                    observed += random_base(rng_);
                } else {
                    // single-base deletion: emit nothing
                }
            } else {
                observed += base == 'N' ? random_base(rng_)
                                        : random_other_base(base, rng_);
            }
        }

        if (observed.size() < len) continue;
        observed.resize(len);
        if (observed.find('N') != std::string::npos) continue;

        SimulatedRead out;
        out.truth.contig = std::move(contig);
        out.truth.position = offset;
        out.truth.direction =
            reverse ? Direction::ReverseComplement : Direction::Forward;
        out.truth.serial = serial_++;
        out.read.name = encode_truth(out.truth);
        out.read.bases = reverse ? reverse_complement(observed) : observed;
        out.read.qualities.assign(len, 'I');
        return out;
    }
    throw std::runtime_error(
        "failed to place a read; genome may be mostly N");
}

std::string to_fastq(const Read& r) {
    std::string out;
    out.reserve(r.name.size() + r.bases.size() + r.qualities.size() + 8);
    out += '@';
    out += r.name;
    out += '\n';
    out += r.bases;
    out += '\n';
    out += "+\n";
    out += r.qualities;
    out += '\n';
    return out;
}

}  // namespace seedaln
