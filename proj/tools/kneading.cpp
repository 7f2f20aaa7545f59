#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    const auto r = kneading::cli::run(argc, argv);
    std::cout << r.payload;
    std::cerr << r.error;
    return r.status;
}
