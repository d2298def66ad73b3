// Tiles the [2]x[3] layer box with {1,2}-length sub-boxes (dominoes) and the
// fibonacci [1]x[2]x[3] box with {1,1,2} bricks, then shows a box that
// certifiably has no tiling.

#include <iostream>

#include "cobweb/cobweb.hpp"

int main() {
    using namespace cobweb;

    auto show = [](const tiling_search_result& res) {
        if (!res.found) {
            std::cout << "no tiling (exhausted after " << res.nodes << " placements)\n";
            return;
        }
        std::cout << res.tiling.tiles.size() << " tiles:\n";
        for (const sub_box& b : res.tiling.tiles) {
            for (const auto& iv : b.intervals) std::cout << " [" << iv[0] << "," << iv[1] << "]";
            std::cout << "\n";
        }
    };

    std::cout << "natural, box [2]x[3], tiles {1,2}:\n";
    show(tile(fsequence::natural(), 2, 3));

    std::cout << "\nfibonacci, box [1]x[2]x[3], tiles {1,1,2}:\n";
    show(tile(fsequence::fibonacci(), 3, 4));

    // 6x6 box against {1,4} tiles: the volume ratio is integral (9) yet no
    // tiling exists; the search certifies that by exhaustion
    std::cout << "\nbox [6]x[6], tiles {1,4}:\n";
    show(tile_box({6, 6}, {1, 4}));
    return 0;
}
