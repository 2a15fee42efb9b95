#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

namespace sixlines {

// one monomial coeff * a^ea b^eb c^ec d^ed of the quintic-pencil coefficient polynomials
struct QuinticTerm {
    std::int64_t coeff;
    std::uint8_t ea, eb, ec, ed;
};

// integer term table for index k = 0..4 (the J'_{k+2} numerator polynomial)
std::pair<const QuinticTerm*, std::size_t> quintic_table(int k);

}  // namespace sixlines
