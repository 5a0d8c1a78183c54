#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "geonf/real.hpp"

int main(int argc, char** argv) {
  geonf::PrecisionScope scope(geonf::kDefaultBits);
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
