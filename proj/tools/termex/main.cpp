#include "termex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return termex::cli::dispatch(args);
}
