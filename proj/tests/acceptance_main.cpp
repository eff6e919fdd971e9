// Standalone verdict-suite runner: prints one pass/fail line per criterion
// and exits 0 only when every criterion passes.  --suite fast skips the
// modular corner-subalgebra discriminant; --suite full (the default here)
// runs everything.

#include <cstring>
#include <iostream>
#include <string>

#include "qma/accept.hpp"

int main(int argc, char** argv) {
    std::string suite = "full";
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--suite") == 0 && k + 1 < argc) {
            suite = argv[++k];
        } else if (std::strncmp(argv[k], "--suite=", 8) == 0) {
            suite = argv[k] + 8;
        } else {
            std::cerr << "usage: acceptance [--suite fast|full]\n";
            return 2;
        }
    }
    if (suite != "fast" && suite != "full") {
        std::cerr << "usage: acceptance [--suite fast|full]\n";
        return 2;
    }
    return qma::run_acceptance(suite, std::cout) ? 0 : 1;
}
