#pragma once

namespace probqsar::dataio {

// Command-line entry point: featurize / train / predict / benchmark /
// ablate / synth-check. Returns 0 on success, 1 on usage errors, 2 on
// data/model errors.
int cli_main(int argc, const char *const *argv);

}  // namespace probqsar::dataio
