#pragma once

#include <string>

namespace seedaln {

/// One sequencing read: bases over {A,C,G,T,N} with a same-length
/// quality string.
struct Read {
    std::string name;
    std::string bases;
    std::string qualities;
    bool operator==(const Read&) const = default;
};

}  // namespace seedaln
