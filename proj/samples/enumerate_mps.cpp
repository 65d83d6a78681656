// Copyright 2026 The DiversiTree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reads an MPS file and lists every solution within q of the optimum.
//
//   enumerate_mps data/knapsack2_max.mps 0.5

#include <cstdio>
#include <cstdlib>

#include "diversitree/diversitree.hpp"

namespace dt = diversitree;

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s FILE.mps [q]\n", argv[0]);
    return 2;
  }
  const double q = argc > 2 ? std::atof(argv[2]) : 0.03;
  try {
    const dt::MipInstance mip = dt::ReadMpsFile(argv[1]).instance;
    const double z_star = dt::FindOptimum(mip);
    const dt::CountResult r = dt::RunBranchAndCount(dt::AddObjectiveCutoff(mip, z_star, q),
                                                    dt::PresetSelector("HHL"), {});
    std::printf("%s: z* = %g, %zu solutions within %g%%%s\n", mip.name.c_str(),
                mip.ReportedObjective(z_star), r.pool.size(), q * 100,
                r.exhausted ? "" : " (search cut short)");
    for (const dt::Solution& s : r.pool.solutions()) {
      std::printf("  %10g :", mip.ReportedObjective(s.objective));
      for (int j = 0; j < mip.num_variables(); ++j) {
        std::printf(" %s=%g", mip.variables[j].name.c_str(), s.values[j]);
      }
      std::printf("\n");
    }
  } catch (const dt::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
