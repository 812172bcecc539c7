// Builds the amalgamated Catch2 once; the installed copy lives outside the
// tree, so include it rather than copying it in.
#include <catch2/catch_amalgamated.cpp>  // NOLINT
