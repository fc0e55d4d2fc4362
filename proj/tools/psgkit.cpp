#include <iostream>
#include <string>
#include <vector>

#include "psgkit/cli.hpp"

int main(int argc, char ** argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return psgkit::run_cli(args, std::cout, std::cerr);
}
