#include <span>

#include "scenario_args.hpp"

int main(int argc, char** argv) {
  return statespace::cli::run_cli(
      std::span<const char* const>(argv, static_cast<std::size_t>(argc)));
}
