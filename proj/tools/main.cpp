#include "cli.hpp"

int main(int argc, char** argv) {
  return aci::cli::emit(aci::cli::run(std::vector<std::string>(argv, argv + argc)));
}
