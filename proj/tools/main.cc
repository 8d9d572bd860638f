#include <string>
#include <vector>

#include "cli.h"

int main(int argc, char** argv) {
  return cohkit::cli::Run(std::vector<std::string>(argv, argv + argc));
}
