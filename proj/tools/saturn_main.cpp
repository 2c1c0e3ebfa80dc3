#include "saturn/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    auto parsed = saturn::parse_args(argc, argv, std::cout, std::cerr);
    if (!parsed.config)
        return parsed.exit_code;
    return saturn::run(*parsed.config, std::cout, std::cerr);
}
