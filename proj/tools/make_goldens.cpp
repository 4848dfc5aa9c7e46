// Maintenance tool: regenerate the golden snapshot from a data directory.
// Run after any deliberate fixture change, then review the diff.

#include <iostream>

#include "crosswash/dataset.hpp"
#include "crosswash/errors.hpp"
#include "crosswash/reproduce.hpp"

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: crosswash_make_goldens <data-dir> <out-dir>\n";
        return 2;
    }
    try {
        const crosswash::dataset::Bundle bundle = crosswash::dataset::load_bundle(argv[1]);
        crosswash::reproduce::write_goldens(bundle, argv[2]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << "golden tables written to " << argv[2] << "\n";
    return 0;
}
