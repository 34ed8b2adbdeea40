#include <iostream>

#include "spochar/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return spochar::run_main(args, std::cout, std::cerr);
}
