#include <cstring>
#include <iostream>

#include "fibdyn/acceptance.hpp"

int main(int argc, char** argv) {
    fibdyn::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--fast") == 0) opts.fast = true;
    int fails = fibdyn::run_acceptance(opts, std::cout);
    return fails == 0 ? 0 : 2;
}
