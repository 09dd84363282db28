#include "cli.hpp"

int main(int argc, char** argv) { return courteous::cli::run_main(argc, argv); }
