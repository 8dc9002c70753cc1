#include "homlab/cli.hpp"

int main(int argc, char** argv) { return homlab::run(argc, argv); }
