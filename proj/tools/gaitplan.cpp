#include "gaitplan/cli.hpp"

int main(int argc, char** argv) {
    return gaitplan::cli_main(argc, argv);
}
