#include "cli/experiment.hpp"

int main(int argc, char** argv)
{
    return bentsmith::cli::run_main(argc, argv);
}
