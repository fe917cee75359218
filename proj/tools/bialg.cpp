#include "bialg/cli.hpp"
#include "bialg/emit.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return bialg::cli::run_command(args, std::cout, std::cerr, bialg::io::want_color());
}
