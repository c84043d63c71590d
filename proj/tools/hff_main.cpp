#include <exception>
#include <iostream>

#include "hff/cli.hpp"

int main(int argc, char** argv) {
    try {
        return hff::cli::run_cli(argc, argv);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
