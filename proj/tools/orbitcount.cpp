#include <orbitcount/cli.hpp>

int main(int argc, char** argv) { return orbitcount::cli::run(argc, argv); }
