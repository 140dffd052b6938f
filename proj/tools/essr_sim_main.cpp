#include <string>
#include <vector>

#include "secrecy/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return secrecy::run_cli(args);
}
