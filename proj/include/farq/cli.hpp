#pragma once

namespace farq {

// Full command-line front end: parses flags and the JSON instance file,
// dispatches to the engines, prints a result document on stdout and returns
// the process exit code. Kept out of main() so tests can link it directly.
int cli_main(int argc, char** argv);

}  // namespace farq
