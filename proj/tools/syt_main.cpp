#include "syt/cli.hpp"

int main(int argc, char** argv) { return syt::run(argc, argv); }
