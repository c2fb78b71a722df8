#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  if (!jackhyp::cli::apply_thread_override()) {
    std::cerr << "usage error: " << jackhyp::cli::kThreadsEnv << " must be a positive integer\n";
    return jackhyp::cli::kUsage;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return jackhyp::cli::run(args, std::cout, std::cerr);
}
