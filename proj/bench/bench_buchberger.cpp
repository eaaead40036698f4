// Serial vs OpenMP Buchberger on a few standard systems. Prints timings and
// checks that both kernels return the same reduced basis.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "flatcheck/groebner.hpp"
#include "flatcheck/parser.hpp"

using namespace flatcheck;

namespace {

struct Case {
  std::string name;
  std::string ring;
  std::vector<std::string> gens;
};

double time_once(const Submodule& m, engine::Exec exec, std::vector<FreeModuleElement>& out) {
  const auto start = std::chrono::steady_clock::now();
  // Fresh copy: no cached basis.
  out = groebner_basis(Submodule(m.universe(), m.rank(), m.generators()), {}, exec)->to_elements();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  const std::vector<Case> cases = {
      {"cyclic4", "ring fiber a b c d;",
       {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"}},
      {"katsura4", "ring fiber u0 u1 u2 u3;",
       {"u0 + 2*u1 + 2*u2 + 2*u3 - 1", "u0^2 + 2*u1^2 + 2*u2^2 + 2*u3^2 - u0", "2*u0*u1 + 2*u1*u2 + 2*u2*u3 - u1",
        "u1^2 + 2*u0*u2 + 2*u1*u3 - u2"}},
      {"cyclic5", "ring fiber a b c d e;",
       {"a + b + c + d + e", "a*b + b*c + c*d + d*e + e*a", "a*b*c + b*c*d + c*d*e + d*e*a + e*a*b",
        "a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c", "a*b*c*d*e - 1"}},
      {"cyclic6", "ring fiber a b c d e f;",
       {"a + b + c + d + e + f", "a*b + b*c + c*d + d*e + e*f + f*a",
        "a*b*c + b*c*d + c*d*e + d*e*f + e*f*a + f*a*b",
        "a*b*c*d + b*c*d*e + c*d*e*f + d*e*f*a + e*f*a*b + f*a*b*c",
        "a*b*c*d*e + b*c*d*e*f + c*d*e*f*a + d*e*f*a*b + e*f*a*b*c + f*a*b*c*d", "a*b*c*d*e*f - 1"}},
  };
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
  std::printf("%-10s %12s %12s %8s %6s\n", "system", "serial [s]", "parallel [s]", "basis", "same");
  bool all_same = true;
  for (const auto& c : cases) {
    auto problem = parse_problem(c.ring);
    std::vector<Polynomial> ps;
    for (const auto& g : c.gens) ps.push_back(parse_polynomial(g, problem.universe));
    auto m = Ideal::ideal(problem.universe, ps);
    double serial = 1e300, parallel = 1e300;
    std::vector<FreeModuleElement> a, b;
    for (int r = 0; r < reps; ++r) {
      serial = std::min(serial, time_once(m, engine::Exec::Serial, a));
      parallel = std::min(parallel, time_once(m, engine::Exec::Parallel, b));
    }
    const bool same = a == b;
    all_same = all_same && same;
    std::printf("%-10s %12.4f %12.4f %8zu %6s\n", c.name.c_str(), serial, parallel, a.size(), same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
