#include "scenario.hpp"

int main(int argc, char** argv) { return mtcav::cli::main_entry(argc, argv); }
