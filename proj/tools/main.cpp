#include <vector>

#include "qfrenet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qfrenet::run_cli(args);
}
