#include "sixlines/quintic_tables.hpp"

#include <stdexcept>

namespace sixlines {

namespace {

constexpr QuinticTerm kQuinticJ2Num[] = {{2,0,0,0,2}, {-2,0,0,1,1}, {2,0,0,2,0}, {-2,0,1,0,1}, {1,0,1,1,0}, {1,0,1,1,1}, {-2,0,1,2,0}, {2,0,2,0,0}, {-2,0,2,1,0}, {2,0,2,2,0}, {1,1,0,0,1}, {-2,1,0,0,2}, {-2,1,0,1,0}, {1,1,0,1,1}, {-2,1,1,0,0}, {1,1,1,0,1}, {1,1,1,1,0}, {-2,1,1,1,1}, {2,2,0,0,0}, {-2,2,0,0,1}, {2,2,0,0,2}};
constexpr QuinticTerm kQuinticJ3Num[] = {{-4,0,0,0,3}, {6,0,0,1,2}, {6,0,0,2,1}, {-4,0,0,3,0}, {6,0,1,0,2}, {-6,0,1,1,1}, {-3,0,1,1,2}, {-3,0,1,2,0}, {-6,0,1,2,1}, {6,0,1,3,0}, {6,0,2,0,1}, {-3,0,2,1,0}, {-6,0,2,1,1}, {-6,0,2,2,0}, {-3,0,2,2,1}, {6,0,2,3,0}, {-4,0,3,0,0}, {6,0,3,1,0}, {6,0,3,2,0}, {-4,0,3,3,0}, {-3,1,0,0,2}, {6,1,0,0,3}, {-6,1,0,1,1}, {-6,1,0,1,2}, {6,1,0,2,0}, {-3,1,0,2,1}, {-6,1,1,0,1}, {-6,1,1,0,2}, {-6,1,1,1,0}, {60,1,1,1,1}, {-6,1,1,1,2}, {-6,1,1,2,0}, {-6,1,1,2,1}, {6,1,2,0,0}, {-3,1,2,0,1}, {-6,1,2,1,0}, {-6,1,2,1,1}, {-3,1,2,2,0}, {6,1,2,2,1}, {-3,2,0,0,1}, {-6,2,0,0,2}, {6,2,0,0,3}, {6,2,0,1,0}, {-6,2,0,1,1}, {-3,2,0,1,2}, {6,2,1,0,0}, {-6,2,1,0,1}, {-3,2,1,0,2}, {-3,2,1,1,0}, {-6,2,1,1,1}, {6,2,1,1,2}, {-4,3,0,0,0}, {6,3,0,0,1}, {6,3,0,0,2}, {-4,3,0,0,3}};
constexpr QuinticTerm kQuinticJ4Num[] = {{1,0,2,2,0}, {-2,0,2,2,1}, {1,0,2,2,2}, {-2,1,1,1,1}, {2,1,1,1,2}, {2,1,1,2,1}, {-2,1,1,2,2}, {2,1,2,1,1}, {-2,1,2,1,2}, {-2,1,2,2,0}, {2,1,2,2,1}, {1,2,0,0,2}, {-2,2,0,1,2}, {1,2,0,2,2}, {-2,2,1,0,2}, {2,2,1,1,1}, {2,2,1,1,2}, {-2,2,1,2,1}, {1,2,2,0,2}, {-2,2,2,1,1}, {1,2,2,2,0}};
constexpr QuinticTerm kQuinticJ5Num[] = {{-2,0,2,2,1}, {1,0,2,2,2}, {1,0,2,2,3}, {1,0,2,3,0}, {1,0,2,3,1}, {-2,0,2,3,2}, {1,0,3,2,0}, {1,0,3,2,1}, {-2,0,3,2,2}, {-2,0,3,3,0}, {1,0,3,3,1}, {1,0,3,3,2}, {1,1,1,1,2}, {-4,1,1,1,3}, {1,1,1,2,1}, {4,1,1,2,2}, {1,1,1,2,3}, {-4,1,1,3,1}, {1,1,1,3,2}, {1,1,2,1,1}, {4,1,2,1,2}, {1,1,2,1,3}, {-2,1,2,2,0}, {-4,1,2,2,1}, {-4,1,2,2,2}, {-2,1,2,2,3}, {1,1,2,3,0}, {4,1,2,3,1}, {1,1,2,3,2}, {-4,1,3,1,1}, {1,1,3,1,2}, {1,1,3,2,0}, {4,1,3,2,1}, {1,1,3,2,2}, {1,1,3,3,0}, {-4,1,3,3,1}, {1,2,0,0,3}, {-2,2,0,1,2}, {1,2,0,1,3}, {1,2,0,2,2}, {-2,2,0,2,3}, {1,2,0,3,2}, {-2,2,1,0,2}, {1,2,1,0,3}, {1,2,1,1,1}, {-4,2,1,1,2}, {4,2,1,1,3}, {4,2,1,2,1}, {-4,2,1,2,2}, {1,2,1,2,3}, {1,2,1,3,1}, {-2,2,1,3,2}, {1,2,2,0,2}, {-2,2,2,0,3}, {4,2,2,1,1}, {-4,2,2,1,2}, {1,2,2,1,3}, {1,2,2,2,0}, {-4,2,2,2,1}, {4,2,2,2,2}, {-2,2,2,3,0}, {1,2,2,3,1}, {1,2,3,0,2}, {1,2,3,1,1}, {-2,2,3,1,2}, {-2,2,3,2,0}, {1,2,3,2,1}, {1,2,3,3,0}, {1,3,0,0,2}, {-2,3,0,0,3}, {1,3,0,1,2}, {1,3,0,1,3}, {-2,3,0,2,2}, {1,3,0,2,3}, {1,3,1,0,2}, {1,3,1,0,3}, {-4,3,1,1,1}, {4,3,1,1,2}, {-4,3,1,1,3}, {1,3,1,2,1}, {1,3,1,2,2}, {-2,3,2,0,2}, {1,3,2,0,3}, {1,3,2,1,1}, {1,3,2,1,2}, {1,3,2,2,0}, {-2,3,2,2,1}};
constexpr QuinticTerm kQuinticJ6Num[] = {{4,0,2,2,2}, {4,0,2,2,3}, {1,0,2,2,4}, {-4,0,2,3,1}, {-10,0,2,3,2}, {-4,0,2,3,3}, {1,0,2,4,0}, {4,0,2,4,1}, {4,0,2,4,2}, {-4,0,3,2,1}, {-10,0,3,2,2}, {-4,0,3,2,3}, {2,0,3,3,0}, {16,0,3,3,1}, {16,0,3,3,2}, {2,0,3,3,3}, {-4,0,3,4,0}, {-10,0,3,4,1}, {-4,0,3,4,2}, {1,0,4,2,0}, {4,0,4,2,1}, {4,0,4,2,2}, {-4,0,4,3,0}, {-10,0,4,3,1}, {-4,0,4,3,2}, {4,0,4,4,0}, {4,0,4,4,1}, {1,0,4,4,2}, {4,1,1,1,3}, {-10,1,1,1,4}, {-10,1,1,2,2}, {12,1,1,2,3}, {4,1,1,2,4}, {4,1,1,3,1}, {12,1,1,3,2}, {-10,1,1,3,3}, {-10,1,1,4,1}, {4,1,1,4,2}, {-10,1,2,1,2}, {12,1,2,1,3}, {4,1,2,1,4}, {16,1,2,2,1}, {4,1,2,2,2}, {-22,1,2,2,3}, {-4,1,2,2,4}, {-4,1,2,3,0}, {-22,1,2,3,1}, {4,1,2,3,2}, {16,1,2,3,3}, {4,1,2,4,0}, {12,1,2,4,1}, {-10,1,2,4,2}, {4,1,3,1,1}, {12,1,3,1,2}, {-10,1,3,1,3}, {-4,1,3,2,0}, {-22,1,3,2,1}, {4,1,3,2,2}, {16,1,3,2,3}, {16,1,3,3,0}, {4,1,3,3,1}, {-22,1,3,3,2}, {-4,1,3,3,3}, {-10,1,3,4,0}, {12,1,3,4,1}, {4,1,3,4,2}, {-10,1,4,1,1}, {4,1,4,1,2}, {4,1,4,2,0}, {12,1,4,2,1}, {-10,1,4,2,2}, {-10,1,4,3,0}, {12,1,4,3,1}, {4,1,4,3,2}, {4,1,4,4,0}, {-10,1,4,4,1}, {1,2,0,0,4}, {-4,2,0,1,3}, {4,2,0,1,4}, {4,2,0,2,2}, {-10,2,0,2,3}, {4,2,0,2,4}, {4,2,0,3,2}, {-4,2,0,3,3}, {1,2,0,4,2}, {-4,2,1,0,3}, {4,2,1,0,4}, {16,2,1,1,2}, {-22,2,1,1,3}, {12,2,1,1,4}, {-10,2,1,2,1}, {4,2,1,2,2}, {4,2,1,2,3}, {-10,2,1,2,4}, {12,2,1,3,1}, {-22,2,1,3,2}, {16,2,1,3,3}, {4,2,1,4,1}, {-4,2,1,4,2}, {4,2,2,0,2}, {-10,2,2,0,3}, {4,2,2,0,4}, {-10,2,2,1,1}, {4,2,2,1,2}, {4,2,2,1,3}, {-10,2,2,1,4}, {4,2,2,2,0}, {4,2,2,2,1}, {12,2,2,2,2}, {4,2,2,2,3}, {4,2,2,2,4}, {-10,2,2,3,0}, {4,2,2,3,1}, {4,2,2,3,2}, {-10,2,2,3,3}, {4,2,2,4,0}, {-10,2,2,4,1}, {4,2,2,4,2}, {4,2,3,0,2}, {-4,2,3,0,3}, {12,2,3,1,1}, {-22,2,3,1,2}, {16,2,3,1,3}, {-10,2,3,2,0}, {4,2,3,2,1}, {4,2,3,2,2}, {-10,2,3,2,3}, {16,2,3,3,0}, {-22,2,3,3,1}, {12,2,3,3,2}, {-4,2,3,4,0}, {4,2,3,4,1}, {1,2,4,0,2}, {4,2,4,1,1}, {-4,2,4,1,2}, {4,2,4,2,0}, {-10,2,4,2,1}, {4,2,4,2,2}, {-4,2,4,3,0}, {4,2,4,3,1}, {1,2,4,4,0}, {2,3,0,0,3}, {-4,3,0,0,4}, {-4,3,0,1,2}, {16,3,0,1,3}, {-10,3,0,1,4}, {-10,3,0,2,2}, {16,3,0,2,3}, {-4,3,0,2,4}, {-4,3,0,3,2}, {2,3,0,3,3}, {-4,3,1,0,2}, {16,3,1,0,3}, {-10,3,1,0,4}, {4,3,1,1,1}, {-22,3,1,1,2}, {4,3,1,1,3}, {12,3,1,1,4}, {12,3,1,2,1}, {4,3,1,2,2}, {-22,3,1,2,3}, {4,3,1,2,4}, {-10,3,1,3,1}, {16,3,1,3,2}, {-4,3,1,3,3}, {-10,3,2,0,2}, {16,3,2,0,3}, {-4,3,2,0,4}, {12,3,2,1,1}, {4,3,2,1,2}, {-22,3,2,1,3}, {4,3,2,1,4}, {4,3,2,2,0}, {-22,3,2,2,1}, {4,3,2,2,2}, {12,3,2,2,3}, {-4,3,2,3,0}, {16,3,2,3,1}, {-10,3,2,3,2}, {-4,3,3,0,2}, {2,3,3,0,3}, {-10,3,3,1,1}, {16,3,3,1,2}, {-4,3,3,1,3}, {-4,3,3,2,0}, {16,3,3,2,1}, {-10,3,3,2,2}, {2,3,3,3,0}, {-4,3,3,3,1}, {1,4,0,0,2}, {-4,4,0,0,3}, {4,4,0,0,4}, {4,4,0,1,2}, {-10,4,0,1,3}, {4,4,0,1,4}, {4,4,0,2,2}, {-4,4,0,2,3}, {1,4,0,2,4}, {4,4,1,0,2}, {-10,4,1,0,3}, {4,4,1,0,4}, {-10,4,1,1,1}, {12,4,1,1,2}, {12,4,1,1,3}, {-10,4,1,1,4}, {4,4,1,2,1}, {-10,4,1,2,2}, {4,4,1,2,3}, {4,4,2,0,2}, {-4,4,2,0,3}, {1,4,2,0,4}, {4,4,2,1,1}, {-10,4,2,1,2}, {4,4,2,1,3}, {1,4,2,2,0}, {-4,4,2,2,1}, {4,4,2,2,2}};

}  // namespace

std::pair<const QuinticTerm*, std::size_t> quintic_table(int k) {
    switch (k) {
        case 0: return {kQuinticJ2Num, std::size(kQuinticJ2Num)};
        case 1: return {kQuinticJ3Num, std::size(kQuinticJ3Num)};
        case 2: return {kQuinticJ4Num, std::size(kQuinticJ4Num)};
        case 3: return {kQuinticJ5Num, std::size(kQuinticJ5Num)};
        case 4: return {kQuinticJ6Num, std::size(kQuinticJ6Num)};
        default: throw std::out_of_range("quintic_table: index");
    }
}

}  // namespace sixlines
