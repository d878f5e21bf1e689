// Regenerates tests/fixtures.hpp: gen_fixtures > tests/fixtures.hpp
#include <cstdio>

#include "derived.hpp"

int main() {
  std::printf("#pragma once\n\n");
  std::printf("// Frozen oracle values, written by gen_fixtures (tests/oracle). Each entry\n");
  std::printf("// names the brute-force route that produced it.\n\n");
  std::printf("namespace fixtures {\n\n");
  std::printf("struct Fixture {\n  const char* name;\n  double re;\n  double im;\n  const char* provenance;\n};\n\n");
  std::printf("inline constexpr Fixture kAll[] = {\n");
  for (const oracle::Derived& d : oracle::derived_values()) {
    const extwhit::Complex v = d.regenerate();
    std::printf("    // %s\n", d.provenance.c_str());
    std::printf("    {\"%s\", %.17g, %.17g,\n     \"%s\"},\n", d.name.c_str(), v.real(), v.imag(), d.provenance.c_str());
  }
  std::printf("};\n\n}  // namespace fixtures\n");
  return 0;
}
