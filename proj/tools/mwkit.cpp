#include <mwkit/cli.hpp>

int main(int argc, char **argv) { return mwkit::cli::run(argc, argv); }
