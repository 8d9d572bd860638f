#ifndef COHKIT_TOOLS_CLI_H_
#define COHKIT_TOOLS_CLI_H_

#include <string>
#include <vector>

namespace cohkit::cli {

// Exit codes: 0 success, 1 runtime failure, 2 usage error.
int Run(std::vector<std::string> args);

// Expands "--manifest file.json" into flags. Keys mirror the long flag names;
// an optional "command" key picks the subcommand. Flags given on the command
// line win over the manifest.
std::vector<std::string> ExpandManifest(const std::vector<std::string>& args);

}  // namespace cohkit::cli

#endif  // COHKIT_TOOLS_CLI_H_
