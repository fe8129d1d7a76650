#include "probqsar/dataio/cli.hpp"

int main(int argc, char **argv) {
  return probqsar::dataio::cli_main(argc, argv);
}
