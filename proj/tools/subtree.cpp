#include "subtree/cli.hpp"

int main(int argc, char** argv) { return subtree::cli::run(argc, argv, std::cout, std::cerr); }
